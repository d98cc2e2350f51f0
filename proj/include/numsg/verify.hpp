#ifndef NUMSG_VERIFY_HPP
#define NUMSG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "numsg/errors.hpp"

// Exhaustive cross-checks of the codec and predicates against the oracles.
namespace numsg::verify {

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string unit;
  std::optional<std::string> counterexample;
};

/// Grids larger than this many vectors are refused with GuardError.
inline constexpr std::uint64_t kMaxGridSize = 50'000'000;

/// encode(decode(v)) == v over {1..bound}^(n-1).
SuiteReport bijection(Int n, Int bound);

/// The Apery-set closure criterion against brute-force closure, for every
/// numerical set with Frobenius <= max_frobenius and every modulus
/// 1..max_modulus it is closed under.
SuiteReport apery_criterion(Int max_frobenius, Int max_modulus = 6);

/// is_semigroup_vector against brute-force closure of the decoded set.
SuiteReport vector_criterion(Int n, Int bound);

/// Closed-form tables against is_semigroup_vector, plus table coverage.
/// Requires 2 <= n <= 5.
SuiteReport closed_forms(Int n, Int bound);

}  // namespace numsg::verify

#endif  // NUMSG_VERIFY_HPP
