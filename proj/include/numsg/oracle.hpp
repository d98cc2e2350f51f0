#ifndef NUMSG_ORACLE_HPP
#define NUMSG_ORACLE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "numsg/numset.hpp"
#include "numsg/posvec.hpp"

// Brute-force ground truth. Everything here works from the definitions only
// (walk the set in increasing order, test sums directly) and never calls the
// codec or the vector predicates, so agreement with them means something.
namespace numsg::oracle {

/// Indices (0, x_1, ..., x_{n-1}) of the Apery elements in the increasing
/// enumeration of the set. Throws PreconditionError unless in Gamma_n.
std::vector<Int> apery_positions(const NumericalSet& set, Int n);

/// Successive differences of apery_positions.
PositionVector pv_by_enumeration(const NumericalSet& set, Int n);

/// Elements w with w - n outside the set, found by scanning upward from 0.
AperySet apery_by_scan(const NumericalSet& set, Int n);

/// Pairs a <= b of nonzero members below the conductor with a + b missing.
std::vector<std::pair<Int, Int>> closure_violations(const NumericalSet& set);

/// Least positive member.
Int multiplicity(const NumericalSet& set);

/// Members s > 0 such that s - s' is not a member for any member 0 < s' < s.
/// Throws PreconditionError if the set is not a semigroup.
std::vector<Int> minimal_generators(const NumericalSet& set);

inline constexpr Int kMaxEnumeratedFrobenius = 20;

/// Calls `visit` once for N_0 and once for each set whose Frobenius number F
/// satisfies 1 <= F <= max_frobenius (gap sets: subsets of {1..F} containing
/// F), in order of increasing F. Throws GuardError above
/// kMaxEnumeratedFrobenius.
void for_each_numset(Int max_frobenius, bool semigroups_only,
                     const std::function<void(const NumericalSet&)>& visit);

std::vector<NumericalSet> enumerate_numsets(Int max_frobenius, bool semigroups_only);

}  // namespace numsg::oracle

#endif  // NUMSG_ORACLE_HPP
