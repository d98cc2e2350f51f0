#ifndef NUMSG_PERMUTATION_HPP
#define NUMSG_PERMUTATION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace numsg {

/// A permutation [p_1 ... p_m] of {1, ..., m}, stored 1-based as written.
/// The empty permutation (m = 0) is allowed.
class Permutation {
public:
  Permutation() = default;

  /// Throws ValidationError unless `entries` is a rearrangement of 1..m.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(std::size_t m);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
  /// 1-based access, matching the bracket notation.
  [[nodiscard]] int at(std::size_t i) const { return entries_.at(i - 1); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> entries_;
};

/// A vector (r_1, ..., r_m) with 0 <= r_i <= i - 1.
class ConversionVector {
public:
  ConversionVector() = default;

  /// Throws ValidationError if some r_i lies outside [0, i - 1].
  explicit ConversionVector(std::vector<int> entries);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
  [[nodiscard]] int at(std::size_t i) const { return entries_.at(i - 1); }

  friend bool operator==(const ConversionVector&, const ConversionVector&) = default;

private:
  std::vector<int> entries_;
};

/// r_i = number of j < i with p_j < p_i.
ConversionVector conversion_vector(const Permutation& pi);

/// Inverse of conversion_vector. Builds the permutation left to right: each
/// step appends r_i + 1 and shifts every earlier entry greater than r_i up
/// by one.
Permutation permutation_from_conversion(const ConversionVector& r);

}  // namespace numsg

#endif  // NUMSG_PERMUTATION_HPP
