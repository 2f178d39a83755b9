#pragma once

#include <iosfwd>
#include <string>

#include "chamber/complex.hpp"

namespace chamber {

// "SCX v1" facet-list text format:
//   line 1:            scx 1
//   then, in order:    vertex <id> <label>     (ids 0..m-1, in order)
//   then, per facet:   facet <id> <id> ...     (ids strictly increasing)
// Blank lines and '#' comments are ignored; 7-bit clean text.
void write_scx(const Complex& k, std::ostream& out);
std::string to_scx(const Complex& k);

// Throws std::invalid_argument on any grammar violation.
Complex read_scx(std::istream& in);
Complex scx_from_string(const std::string& text);

void write_scx_file(const Complex& k, const std::string& path);
Complex read_scx_file(const std::string& path);

}  // namespace chamber
