#include "qad/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace qad {

Alphabet::Alphabet(std::vector<std::string> displays) {
    symbols_.reserve(displays.size());
    for (auto& d : displays) {
        if (d.empty())
            throw std::invalid_argument("alphabet: empty symbol display");
        if (d.find_first_of(" \t\n") != std::string::npos)
            throw std::invalid_argument("alphabet: whitespace in symbol display '" + d + "'");
        for (const auto& s : symbols_)
            if (s.display == d)
                throw std::invalid_argument("alphabet: duplicate symbol display '" + d + "'");
        symbols_.push_back(Symbol{static_cast<int>(symbols_.size()), std::move(d)});
    }
}

const Symbol& Alphabet::at(int id) const {
    if (id < 0 || id >= size())
        throw std::invalid_argument("alphabet: symbol id " + std::to_string(id) + " out of range");
    return symbols_[static_cast<size_t>(id)];
}

std::optional<int> Alphabet::find(std::string_view display) const {
    for (const auto& s : symbols_)
        if (s.display == display)
            return s.id;
    return std::nullopt;
}

int Alphabet::require(std::string_view display) const {
    if (auto id = find(display))
        return *id;
    throw std::invalid_argument("alphabet: unknown symbol '" + std::string(display) + "'");
}

std::string word_str(const Alphabet& alphabet, const Word& word) {
    bool all_single = true;
    for (int id : word)
        if (alphabet.at(id).display.size() != 1)
            all_single = false;
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !all_single)
            out += '.';
        out += alphabet.at(word[i]).display;
    }
    return out;
}

Word word_of(const Alphabet& alphabet, std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text)
        w.push_back(alphabet.require(std::string_view(&c, 1)));
    return w;
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace qad
