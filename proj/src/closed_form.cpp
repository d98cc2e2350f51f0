#include "numsg/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "numsg/checked.hpp"

namespace numsg {
namespace {

UInequality ge(std::vector<int> lhs, std::vector<int> rhs, Int constant = 0) {
  return UInequality{std::move(lhs), std::move(rhs), constant};
}

const std::vector<ClosedFormRow>& table(std::size_t length) {
  // n = 2: no restriction.
  static const std::vector<ClosedFormRow> t1 = {
      {{{1}}, {}},
  };
  // n = 3: u1 >= u2 in both classes.
  static const std::vector<ClosedFormRow> t2 = {
      {{{1, 1}, {1, 2}}, {ge({1}, {2})}},
  };
  // n = 4.
  static const std::vector<ClosedFormRow> t3 = {
      {{{1, 1, 1}, {1, 2, 3}}, {ge({1}, {2}), ge({1}, {3})}},
      {{{1, 1, 2}, {1, 2, 2}}, {ge({1}, {3})}},
      {{{1, 2, 1}}, {ge({1}, {2, 3})}},
      {{{1, 1, 3}}, {ge({1}, {2, 3}, 1)}},
  };
  // n = 5.
  static const std::vector<ClosedFormRow> t4 = {
      {{{1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 2, 3}, {1, 2, 3, 4}},
       {ge({1}, {2}), ge({1}, {3}), ge({1}, {4}), ge({1, 2}, {3, 4})}},
      {{{1, 2, 1, 2}, {1, 2, 3, 1}}, {ge({1}, {2}), ge({1}, {3, 4})}},
      {{{1, 1, 3, 3}, {1, 1, 1, 4}}, {ge({1}, {2}), ge({1}, {3, 4}, 1)}},
      {{{1, 1, 1, 2}, {1, 2, 1, 4}}, {ge({1}, {2, 3}), ge({1}, {4}), ge({1, 2}, {3, 4})}},
      {{{1, 2, 3, 3}, {1, 1, 3, 1}}, {ge({1}, {2, 3}, 1), ge({1}, {4}), ge({1, 2}, {3, 4})}},
      {{{1, 1, 1, 3}, {1, 2, 3, 2}, {1, 2, 2, 1}, {1, 1, 2, 4}, {1, 1, 2, 3}, {1, 2, 2, 2}},
       {ge({1}, {2, 3, 4}, 1)}},
      {{{1, 1, 3, 4}}, {ge({1}, {2, 3, 4}, 2)}},
      {{{1, 2, 1, 1}}, {ge({1}, {2, 3, 4})}},
      {{{1, 1, 2, 1}, {1, 2, 1, 3}}, {ge({1}, {2, 3}), ge({1}, {3, 4})}},
      {{{1, 2, 2, 4}, {1, 1, 3, 2}}, {ge({1}, {2, 3}, 1), ge({1}, {3, 4}, 1)}},
  };
  switch (length) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default:
      throw ValidationError("closed-form conditions exist only for vectors of length 1 to 4, got " +
                            std::to_string(length));
  }
}

std::size_t box_size(std::size_t length) {
  std::size_t total = 1;
  for (std::size_t i = 2; i <= length; ++i) total *= i;
  return total;
}

// Every representative in {1} x {1,2} x ... x {1..length} must be listed once.
void check_coverage(std::size_t length) {
  std::size_t listed = 0;
  for (const auto& row : table(length)) {
    for (const auto& rep : row.representatives) {
      if (rep.size() != length) throw std::logic_error("closed-form row has wrong length");
      for (std::size_t i = 0; i < length; ++i) {
        if (rep[i] < 1 || rep[i] > static_cast<Int>(i + 1)) {
          throw std::logic_error("closed-form row lists a non-representative");
        }
      }
      if (closed_form_row_count(rep) != 1) {
        throw std::logic_error("closed-form representative listed more than once");
      }
      ++listed;
    }
  }
  if (listed != box_size(length)) throw std::logic_error("closed-form table is incomplete");
}

void check_all_tables_once() {
  static const bool checked = [] {
    for (std::size_t len = 1; len <= 4; ++len) check_coverage(len);
    return true;
  }();
  (void)checked;
}

}  // namespace

bool UInequality::holds(std::span<const Int> u) const {
  Int left = 0;
  Int right = constant;
  for (int x : lhs) left = checked_add(left, u[static_cast<std::size_t>(x - 1)]);
  for (int x : rhs) right = checked_add(right, u[static_cast<std::size_t>(x - 1)]);
  return left >= right;
}

std::span<const ClosedFormRow> closed_form_table(std::size_t length) { return table(length); }

std::size_t closed_form_row_count(std::span<const Int> representative) {
  std::size_t count = 0;
  for (const auto& row : table(representative.size())) {
    count += static_cast<std::size_t>(
        std::count_if(row.representatives.begin(), row.representatives.end(), [&](const auto& rep) {
          return std::equal(rep.begin(), rep.end(), representative.begin(), representative.end());
        }));
  }
  return count;
}

const ClosedFormRow& closed_form_row(const PositionVector& v) {
  check_all_tables_once();
  const auto rep = class_profile(v).representative;
  for (const auto& row : table(v.size())) {
    for (const auto& listed : row.representatives) {
      if (std::equal(listed.begin(), listed.end(), rep.entries().begin(), rep.entries().end())) {
        return row;
      }
    }
  }
  throw std::logic_error("no closed-form row for representative");
}

bool is_semigroup_closed_form(const PositionVector& v) {
  if (v.size() == 0) return true;
  const auto& row = closed_form_row(v);
  const auto u = class_profile(v).u;
  return std::all_of(row.inequalities.begin(), row.inequalities.end(),
                     [&](const UInequality& q) { return q.holds(u); });
}

}  // namespace numsg
