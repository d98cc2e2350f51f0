#include <doctest.h>

#include "helpers.hpp"
#include "numsg/closed_form.hpp"

using namespace numsg;

namespace {
PositionVector pv(std::vector<Int> v) { return PositionVector(std::move(v)); }
}  // namespace

TEST_CASE("closed-form examples") {
  // (2,2,4): representative (1,2,1), u = (1,0,1), u1 >= u2 + u3.
  CHECK(closed_form_row(pv({2, 2, 4})).representatives == std::vector<std::vector<Int>>{{1, 2, 1}});
  CHECK(is_semigroup_closed_form(pv({2, 2, 4})));
  // (2,2,5): representative (1,2,2), u = (1,0,1), u1 >= u3.
  CHECK(closed_form_row(pv({2, 2, 5})).inequalities.size() == 1);
  CHECK(is_semigroup_closed_form(pv({2, 2, 5})));
  CHECK(is_semigroup_closed_form(pv({2, 4})));
  CHECK_FALSE(is_semigroup_closed_form(pv({2, 6})));
  CHECK(is_semigroup_closed_form(pv({1})));
  CHECK(is_semigroup_closed_form(pv({1000})));
  CHECK(is_semigroup_closed_form(pv({})));
}

TEST_CASE("closed forms stop at four entries") {
  CHECK_THROWS_AS(is_semigroup_closed_form(pv({1, 1, 1, 1, 1})), ValidationError);
  CHECK_THROWS_AS(closed_form_table(5), ValidationError);
}

TEST_CASE("every representative appears in exactly one row") {
  for (std::size_t len = 1; len <= 4; ++len) {
    std::size_t total = 0;
    for (const auto& row : closed_form_table(len)) total += row.representatives.size();
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= len; ++i) factorial *= i;
    CHECK(total == factorial);
    VectorEnumerator reps(static_cast<Int>(len) + 1, static_cast<Int>(len), VectorFilter::all);
    while (auto r = reps.next()) {
      bool is_rep = true;
      for (std::size_t i = 1; i <= len; ++i) is_rep = is_rep && r->at(i) <= static_cast<Int>(i);
      if (is_rep) CHECK(closed_form_row_count(r->entries()) == 1);
    }
  }
}

TEST_CASE("inequality evaluation") {
  const UInequality q{{1, 2}, {3, 4}, 1};
  CHECK(q.holds(std::vector<Int>{3, 1, 1, 2}));
  CHECK_FALSE(q.holds(std::vector<Int>{2, 1, 1, 2}));
}

TEST_CASE("closed forms agree with the general predicate on small grids") {
  for (Int n = 2; n <= 5; ++n) {
    VectorEnumerator grid(n, 8, VectorFilter::all);
    while (auto v = grid.next()) REQUIRE(is_semigroup_closed_form(*v) == is_semigroup_vector(*v));
  }
}
