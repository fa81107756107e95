// Plain-text serialization of quasi-automatic structures: named blocks,
// explicit integer state ids, one fact per line. The writer always emits the
// canonical Nivat form; the parser additionally accepts relations given as
// two-tape transition lists.
#ifndef QAD_FORMAT_HPP
#define QAD_FORMAT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qad/structure.hpp"

namespace qad {

class FormatError : public std::runtime_error {
  public:
    FormatError(int line, const std::string& message);
    int line() const { return line_; }

  private:
    int line_;
};

// Throws FormatError with a 1-based line number on any malformed input,
// including inputs that parse line-by-line but do not assemble into a
// well-formed structure.
QuasiAutomaticStructure parse_structure(std::istream& in);
QuasiAutomaticStructure parse_structure(const std::string& text);
// Throws std::runtime_error when the file cannot be opened.
QuasiAutomaticStructure load_structure(const std::string& path);

std::string write_structure(const QuasiAutomaticStructure& s);
void save_structure(const QuasiAutomaticStructure& s, const std::string& path);

}  // namespace qad

#endif
