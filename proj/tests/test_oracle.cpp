#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "numsg/oracle.hpp"

using namespace numsg;
using numsg::test::vec;

TEST_CASE("positions by enumeration") {
  const auto s = from_generators(std::vector<Int>{4, 7, 9});
  CHECK(oracle::apery_positions(s, 4) == std::vector<Int>{0, 2, 4, 8});
  CHECK(vec(oracle::pv_by_enumeration(s, 4)) == std::vector<Int>{2, 2, 4});
  CHECK(vec(oracle::pv_by_enumeration(NumericalSet{}, 4)) == std::vector<Int>{1, 1, 1});
  CHECK(vec(oracle::pv_by_enumeration(from_generators(std::vector<Int>{6, 16, 20, 21, 29}), 6)) ==
        std::vector<Int>{3, 2, 1, 6, 7});
  CHECK_THROWS_AS(oracle::pv_by_enumeration(s, 5), PreconditionError);
}

TEST_CASE("closure violations") {
  CHECK(oracle::closure_violations(from_generators(std::vector<Int>{4, 7, 9})).empty());
  CHECK(oracle::closure_violations(NumericalSet{}).empty());
  const auto bad = oracle::closure_violations(numset_from_apery(AperySet(3, {0, 5, 13})));
  CHECK(bad == std::vector<std::pair<Int, Int>>{{5, 5}});
}

TEST_CASE("enumerate numerical sets") {
  CHECK(oracle::enumerate_numsets(0, false) == std::vector<NumericalSet>{NumericalSet{}});
  const auto two = oracle::enumerate_numsets(2, false);
  CHECK(two.size() == 4);
  CHECK(two[1] == from_gaps(std::vector<Int>{1}));
  CHECK(two[2] == from_gaps(std::vector<Int>{2}));
  CHECK(two[3] == from_gaps(std::vector<Int>{1, 2}));

  // N_0, <2,3>, <3,4,5>, <2,5>, <4,5,6,7>.
  const auto sg = oracle::enumerate_numsets(3, true);
  CHECK(sg.size() == 5);
  CHECK(sg[4] == from_generators(std::vector<Int>{4, 5, 6, 7}));

  // 1 + sum over F of 2^(F-1).
  CHECK(oracle::enumerate_numsets(9, false).size() == 512);
  CHECK_THROWS_AS(oracle::enumerate_numsets(21, false), GuardError);
  CHECK_THROWS_AS(oracle::enumerate_numsets(-1, false), ValidationError);
}

TEST_CASE("semigroup counts by genus") {
  // Every semigroup of genus g has Frobenius <= 2g - 1.
  std::map<Int, int> by_genus;
  for (const auto& s : oracle::enumerate_numsets(11, true)) {
    if (s.genus() <= 6) ++by_genus[s.genus()];
  }
  const std::vector<int> expected{1, 1, 2, 4, 7, 12, 23};
  for (Int g = 0; g <= 6; ++g) CHECK(by_genus[g] == expected[static_cast<std::size_t>(g)]);
}

TEST_CASE("definition-based minimal generators") {
  CHECK(oracle::minimal_generators(NumericalSet{}) == std::vector<Int>{1});
  CHECK(oracle::minimal_generators(from_generators(std::vector<Int>{4, 7, 9})) ==
        std::vector<Int>{4, 7, 9});
  CHECK(oracle::minimal_generators(NumericalSet(5, {0})) == std::vector<Int>{5, 6, 7, 8, 9});
  CHECK_THROWS_AS(oracle::minimal_generators(from_gaps(std::vector<Int>{2})), PreconditionError);
  CHECK(oracle::multiplicity(from_gaps(std::vector<Int>{1, 2, 3})) == 4);
}
