#ifndef NUMSG_TESTS_HELPERS_HPP
#define NUMSG_TESTS_HELPERS_HPP

#include <span>
#include <vector>

#include "numsg/numset.hpp"
#include "numsg/permutation.hpp"
#include "numsg/posvec.hpp"

namespace numsg::test {

inline std::vector<Int> vec(std::span<const Int> s) { return {s.begin(), s.end()}; }
inline std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }
inline std::vector<Int> vec(const PositionVector& v) { return vec(v.entries()); }
inline std::vector<Int> vec(const AperySet& a) { return vec(a.elements()); }
inline std::vector<int> vec(const Permutation& p) { return vec(p.entries()); }
inline std::vector<int> vec(const ConversionVector& r) { return vec(r.entries()); }

/// Members of {w + kn} up to `limit`, by direct union of progressions.
inline std::vector<Int> union_of_progressions(Int n, std::span<const Int> w, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
  for (Int a : w) {
    for (Int x = a; x <= limit; x += n) in[static_cast<std::size_t>(x)] = true;
  }
  std::vector<Int> out;
  for (Int x = 0; x <= limit; ++x) {
    if (in[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

/// Members of the set up to `limit`.
inline std::vector<Int> members_up_to(const NumericalSet& s, Int limit) {
  std::vector<Int> out;
  for (Int x = 0; x <= limit; ++x) {
    if (s.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace numsg::test

#endif  // NUMSG_TESTS_HELPERS_HPP
