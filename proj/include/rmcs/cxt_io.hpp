#pragma once

#include <iosfwd>
#include <string>

#include "rmcs/fca.hpp"

namespace rmcs::fca {

// Burmeister CXT format:
//   line 1: "B"
//   line 2: context name (may be blank)
//   lines 3-4: object count, attribute count
//   then one object name per line, one attribute name per line,
//   then one row per object of 'X' / '.' characters.
// write_cxt emits exactly this; read_cxt additionally tolerates blank lines
// between the header and the name block, and trailing '\r'.
FormalContext read_cxt(std::istream& in);
FormalContext read_cxt_file(const std::string& path);

void write_cxt(std::ostream& out, const FormalContext& ctx);
void write_cxt_file(const std::string& path, const FormalContext& ctx);

}  // namespace rmcs::fca
