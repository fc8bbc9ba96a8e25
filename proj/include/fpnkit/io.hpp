#ifndef FPNKIT_IO_HPP
#define FPNKIT_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fpnkit/torsion.hpp"

namespace fpnkit {

/// Parse failure with the 1-based line where it was detected.
struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Presentation file: an optional "module <label>" line followed by the
// relations matrix block ("<ring> <rows> <cols>" then one entry per line);
// the generator count is the matrix row count.  Lines starting with '#' are
// comments.
std::string emit_presentation(const Presentation& p);
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(const std::string& text);
Presentation read_presentation_file(const std::string& path);

// Universe file:
//   universe <ring>
//   modules <count>
//   <count presentation blocks>
//   maps <count>
//   <count blocks: "map <from> <to> inclusion|surjection <label>" + matrix>
std::string emit_universe(const ModuleUniverse& u);
ModuleUniverse parse_universe(std::istream& in);
ModuleUniverse parse_universe(const std::string& text);

}  // namespace fpnkit

#endif
