#pragma once

#include <iosfwd>
#include <string>

#include "wheelfree/weights.hpp"

namespace wheelfree {

// Line-oriented text format, '#' starts a comment:
//   trigraph <n>
//   e <u> <v>                       strongly adjacent pair
//   s <u> <v>                       semi-adjacent pair
//   w <u> <val>                     vertex weight, default 0
//   sw <u> <v> <wuv> <wvu> <wpair>  pair weights, semi pairs only
// Unlisted pairs are strongly anti-adjacent. Throws ParseError.
WeightedTrigraph parse_instance(std::istream& in);
WeightedTrigraph parse_instance_string(const std::string& text);
WeightedTrigraph read_instance_file(const std::string& path);

// Canonical text: header, e/s lines in lexicographic pair order, nonzero
// vertex weights, nonzero pair weights with u < v. parse(write(x)) == x and
// write(parse(write(x))) == write(x).
std::string write_instance(const WeightedTrigraph& wt);
void write_instance_file(const WeightedTrigraph& wt, const std::string& path);

}  // namespace wheelfree
