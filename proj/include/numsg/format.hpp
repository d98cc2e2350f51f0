#ifndef NUMSG_FORMAT_HPP
#define NUMSG_FORMAT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/numset.hpp"
#include "numsg/permutation.hpp"
#include "numsg/posvec.hpp"

namespace numsg {

/// "3,2,1,6,7"; the empty list is "".
std::string join(std::span<const Int> values);
std::string join(std::span<const int> values);

/// Parses "a,b,c" (no spaces). The empty string is the empty list. Throws
/// ValidationError on anything else that is not a list of 64-bit integers.
std::vector<Int> parse_int_list(std::string_view text);

PositionVector parse_position_vector(std::string_view text);

/// "{0,4,7,8,9,11→}": sporadic elements, then the conductor and an arrow.
/// N_0 is "{0→}".
std::string to_text(const NumericalSet& set);

/// "4:{0,7,9,14}".
std::string to_text(const AperySet& apery);

}  // namespace numsg

#endif  // NUMSG_FORMAT_HPP
