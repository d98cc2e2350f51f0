#include <doctest.h>

#include <limits>

#include "numsg/checked.hpp"

using namespace numsg;

TEST_CASE("checked arithmetic refuses to wrap") {
  constexpr Int big = std::numeric_limits<Int>::max();
  CHECK(checked_add(big - 1, 1) == big);
  CHECK_THROWS_AS((void)checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS((void)checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
  CHECK(checked_mul(Int{1} << 31, Int{1} << 31) == Int{1} << 62);
  CHECK_THROWS_AS((void)checked_mul(Int{1} << 32, Int{1} << 31), OverflowError);
}

TEST_CASE("floor division and modulus round toward negative infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-8, 2) == -4);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(7, 3) == 1);
  CHECK(floor_mod(-6, 3) == 0);
}
