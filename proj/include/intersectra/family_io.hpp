#ifndef INTERSECTRA_FAMILY_IO_HPP
#define INTERSECTRA_FAMILY_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "intersectra/set_family.hpp"

namespace intersectra {

// Text format, one set per line:
//
//   # comment line
//   n=7 r=3
//   1 2 3
//   1 4 5
//
// The header is optional ("n=<n>" alone is accepted; r asserts a uniform
// rank).  Set lines are strictly increasing space-separated integers; blank
// lines and '#' comment lines are ignored.  Without a header, n is the
// largest element seen and the rank is inferred when members share a size.
// Serialization always writes a header and members in colex order, so
// parse(serialize(F)) == F bit-exactly for canonically stored families.

SetFamily parse_family(std::istream& in);
SetFamily parse_family(const std::string& text);
SetFamily load_family(const std::string& path);

std::string serialize_family(const SetFamily& f);
void save_family(const SetFamily& f, const std::string& path);

// Parse errors carry 1-based line numbers.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace intersectra

#endif
