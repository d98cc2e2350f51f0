#ifndef NUMSG_CLOSED_FORM_HPP
#define NUMSG_CLOSED_FORM_HPP

#include <span>
#include <vector>

#include "numsg/posvec.hpp"

namespace numsg {

// Explicit semigroup conditions on position vectors of length 1 to 4
// (moduli 2 to 5), keyed by the class representative.

/// sum_{x in lhs} u_x >= sum_{x in rhs} u_x + constant, indices 1-based.
struct UInequality {
  std::vector<int> lhs;
  std::vector<int> rhs;
  Int constant = 0;

  [[nodiscard]] bool holds(std::span<const Int> u) const;
};

struct ClosedFormRow {
  std::vector<std::vector<Int>> representatives;
  std::vector<UInequality> inequalities;
};

/// Rows for vectors of the given length, 1 <= length <= 4.
std::span<const ClosedFormRow> closed_form_table(std::size_t length);

/// Number of rows listing `representative`; 1 for every valid representative.
std::size_t closed_form_row_count(std::span<const Int> representative);

/// Throws ValidationError for length > 4. The empty vector is a semigroup.
const ClosedFormRow& closed_form_row(const PositionVector& v);

bool is_semigroup_closed_form(const PositionVector& v);

}  // namespace numsg

#endif  // NUMSG_CLOSED_FORM_HPP
