#ifndef NUMSG_POSVEC_HPP
#define NUMSG_POSVEC_HPP

#include <optional>
#include <span>
#include <vector>

#include "numsg/errors.hpp"
#include "numsg/numset.hpp"
#include "numsg/permutation.hpp"

namespace numsg {

/// (v_1, ..., v_m), all entries >= 1. The modulus is always m + 1.
///
/// v_i is the gap between the enumeration indices of the (i-1)-th and i-th
/// smallest Apery elements, so the partial sums v_1 + ... + v_i give the
/// position of w_i in the increasing enumeration of the set.
class PositionVector {
public:
  PositionVector() = default;
  /// Throws ValidationError if any entry is < 1.
  explicit PositionVector(std::vector<Int> entries);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] Int modulus() const noexcept { return static_cast<Int>(entries_.size()) + 1; }
  [[nodiscard]] std::span<const Int> entries() const noexcept { return entries_; }
  /// 1-based.
  [[nodiscard]] Int at(std::size_t i) const { return entries_.at(i - 1); }

  friend auto operator<=>(const PositionVector&, const PositionVector&) = default;

private:
  std::vector<Int> entries_;
};

/// w_i = n * k_i + pi_i for the sorted nonzero Apery elements.
struct AperyDecomposition {
  Int modulus = 1;
  std::vector<Int> k;
  Permutation pi;

  [[nodiscard]] AperySet to_apery() const;
};

AperyDecomposition decompose(const AperySet& apery);

/// Every intermediate sequence of the vector-to-Apery reconstruction.
struct DecodeTrace {
  ConversionVector t;
  std::vector<Int> l;
  Permutation sigma;
  AperySet apery{1, {0}};
};

DecodeTrace decode_trace(const PositionVector& v);

/// Apery set of the unique numerical set in Gamma_{m+1} with position vector
/// v. Throws OverflowError if an element exceeds 64 bits.
AperySet decode(const PositionVector& v);

PositionVector encode(const AperySet& apery);

/// encode(apery_set(set, n)).
PositionVector encode_numset(const NumericalSet& set, Int n);

struct ClassProfile {
  /// ((v_i - 1) mod i) + 1, the member of v's class with entries in 1..i.
  PositionVector representative;
  Permutation permutation;
  /// gamma_i = 1 iff pi_{i-1} > pi_i; gamma_1 = 0.
  std::vector<int> gamma;
  /// u_i = floor((v_i - 1) / i).
  std::vector<Int> u;
};

ClassProfile class_profile(const PositionVector& v);

/// v_i = z_i (mod i) for every i. Throws ValidationError on length mismatch.
bool congruent(const PositionVector& v, const PositionVector& z);

/// Whether decode(v) generates a numerical semigroup, decided from the class
/// profile alone: with K_i = sum_{x<=i}(u_x + gamma_x), require
///   K_i + (pi_i + pi_j - pi_l)/n >= K_l - K_j
/// for all 0 < i <= j < l with pi_i + pi_j = pi_l (mod n).
bool is_semigroup_vector(const PositionVector& v);

/// n = m + 1 is the multiplicity of the decoded semigroup iff v_1 > 1.
bool has_multiplicity_n(const PositionVector& v);

enum class VectorFilter { all, semigroups, semigroups_with_multiplicity_n };

/// Lexicographic walk over {1..bound}^(n-1), yielding vectors that pass the
/// filter.
class VectorEnumerator {
public:
  VectorEnumerator(Int n, Int bound, VectorFilter filter);

  std::optional<PositionVector> next();

private:
  bool advance();

  Int bound_;
  VectorFilter filter_;
  std::vector<Int> current_;
  bool exhausted_ = false;
  bool started_ = false;
};

std::vector<PositionVector> enumerate_vectors(Int n, Int bound, VectorFilter filter);

}  // namespace numsg

#endif  // NUMSG_POSVEC_HPP
