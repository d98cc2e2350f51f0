#ifndef NUMSG_NUMSET_HPP
#define NUMSG_NUMSET_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numsg/errors.hpp"

namespace numsg {

/// A cofinite subset of the nonnegative integers containing 0, stored as a
/// conductor c and the sorted "sporadic" members below it.
///
/// x is a member iff x >= c or x is sporadic. For c > 0, 0 is sporadic and
/// c - 1 is not; for c = 0 the set is all of N_0 and nothing is sporadic.
class NumericalSet {
public:
  /// N_0.
  NumericalSet() = default;

  /// Throws ValidationError if (conductor, sporadic) violates the invariants
  /// above, or GuardError if the conductor exceeds kMaterializationLimit.
  NumericalSet(Int conductor, std::vector<Int> sporadic);

  [[nodiscard]] Int conductor() const noexcept { return conductor_; }
  [[nodiscard]] std::span<const Int> sporadic() const noexcept { return sporadic_; }
  /// c - 1, or -1 for N_0.
  [[nodiscard]] Int frobenius() const noexcept { return conductor_ - 1; }
  [[nodiscard]] Int genus() const noexcept {
    return conductor_ - static_cast<Int>(sporadic_.size());
  }
  [[nodiscard]] std::vector<Int> gaps() const;

  [[nodiscard]] bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return below_conductor_[static_cast<std::size_t>(x)];
  }

  friend bool operator==(const NumericalSet& a, const NumericalSet& b) {
    return a.conductor_ == b.conductor_ && a.sporadic_ == b.sporadic_;
  }

private:
  Int conductor_ = 0;
  std::vector<Int> sporadic_;
  std::vector<bool> below_conductor_;
};

/// Ap(I, n): one element per residue class mod n, sorted, 0 first.
class AperySet {
public:
  /// Accepts the elements in any order. Throws ValidationError unless they
  /// form a complete residue system mod n of nonnegative integers containing 0.
  AperySet(Int modulus, std::vector<Int> elements);

  [[nodiscard]] Int modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::span<const Int> elements() const noexcept { return elements_; }
  /// w_i, 0-based so that at(0) == 0.
  [[nodiscard]] Int at(std::size_t i) const { return elements_.at(i); }
  [[nodiscard]] Int max() const noexcept { return elements_.back(); }
  /// The Apery element congruent to r mod n.
  [[nodiscard]] Int with_residue(Int r) const { return by_residue_.at(static_cast<std::size_t>(r)); }

  /// Membership in {w + kn : w in A, k >= 0} without materializing it.
  [[nodiscard]] bool generates(Int x) const noexcept;

  friend bool operator==(const AperySet& a, const AperySet& b) {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }

private:
  Int modulus_;
  std::vector<Int> elements_;
  std::vector<Int> by_residue_;
};

struct SemigroupSummary {
  Int multiplicity = 1;
  Int embedding_dimension = 1;
  Int frobenius = -1;
  Int genus = 0;
  std::vector<Int> minimal_generators{1};

  friend bool operator==(const SemigroupSummary&, const SemigroupSummary&) = default;
};

NumericalSet from_gaps(std::span<const Int> gaps);

/// Smallest numerical semigroup containing `gens`. Throws ValidationError
/// on an empty list, a nonpositive generator, or gcd != 1 ("not cofinite").
NumericalSet from_generators(std::span<const Int> gens);

inline bool contains(const NumericalSet& set, Int x) { return set.contains(x); }

/// True iff i + n is in the set for every member i. Requires n >= 1.
bool in_gamma_n(const NumericalSet& set, Int n);

/// Throws PreconditionError unless in_gamma_n(set, n).
AperySet apery_set(const NumericalSet& set, Int n);

NumericalSet numset_from_apery(const AperySet& apery);

/// w_i + w_j >= w_l for every 0 < i <= j < l with w_i + w_j = w_l mod n.
bool apery_is_semigroup(const AperySet& apery);

/// Lexicographically least pair a <= b of nonzero members whose sum falls
/// outside the set generated by `apery`, or nullopt if that set is closed.
std::optional<std::pair<Int, Int>> first_violation(const AperySet& apery);

bool is_semigroup(const NumericalSet& set);

/// Throws PreconditionError if `set` is not closed under addition.
SemigroupSummary summary(const NumericalSet& set);

/// Same data computed from any Apery set of the semigroup; never
/// materializes the set. Throws PreconditionError if not a semigroup.
SemigroupSummary summary(const AperySet& apery);

}  // namespace numsg

#endif  // NUMSG_NUMSET_HPP
