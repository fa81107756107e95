// Symbols, alphabets and words shared by every automaton in the library.
#ifndef QAD_ALPHABET_HPP
#define QAD_ALPHABET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qad {

struct Symbol {
    int id = 0;
    std::string display;

    bool operator==(const Symbol&) const = default;
};

// A finite ordered set of symbols. Symbol ids are dense indices 0..size-1;
// displays are unique non-empty tokens without whitespace.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> displays);

    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbol& at(int id) const;
    std::optional<int> find(std::string_view display) const;
    // Like find, but throws std::invalid_argument for unknown displays.
    int require(std::string_view display) const;

    std::vector<Symbol>::const_iterator begin() const { return symbols_.begin(); }
    std::vector<Symbol>::const_iterator end() const { return symbols_.end(); }

    bool operator==(const Alphabet&) const = default;

  private:
    std::vector<Symbol> symbols_;
};

// A word is a sequence of symbol ids over some alphabet.
using Word = std::vector<int>;

// Joins symbol displays; single-character displays are joined bare, longer
// ones with '.' separators. Empty word renders as "".
std::string word_str(const Alphabet& alphabet, const Word& word);

// Parses a word whose symbols all have single-character displays.
Word word_of(const Alphabet& alphabet, std::string_view text);

// Shortlex: by length first, then lexicographically by symbol id.
bool length_lex_less(const Word& a, const Word& b);

}  // namespace qad

#endif
