#include "doctest.h"
#include "symcoh/integer.hpp"

#include <limits>

using symcoh::Integer;

TEST_CASE("integer arithmetic promotes past int64") {
  const Integer big(std::numeric_limits<long long>::max());
  const Integer sum = big + Integer(1);
  CHECK_FALSE(sum.is_small());
  CHECK(sum - Integer(1) == big);
  CHECK((sum - Integer(1)).is_small());
  CHECK((big * big) / big == big);
  CHECK(Integer::parse("-123456789012345678901234567890")->to_string() == "-123456789012345678901234567890");
  CHECK_FALSE(Integer::parse("12a").has_value());
}

TEST_CASE("integer number theory") {
  CHECK(symcoh::gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(symcoh::lcm(Integer(4), Integer(6)) == Integer(12));
  CHECK(symcoh::mod(Integer(-7), Integer(3)) == Integer(2));
  CHECK(symcoh::floor_div(Integer(-7), Integer(2)) == Integer(-4));
  CHECK(symcoh::factorial(5) == Integer(120));
  auto b = symcoh::extended_gcd(Integer(240), Integer(46));
  CHECK(b.g == Integer(2));
  CHECK(b.u * Integer(240) + b.v * Integer(46) == Integer(2));
  CHECK(*symcoh::inverse_mod(3, 7) == 5);
  CHECK_FALSE(symcoh::inverse_mod(2, 4).has_value());
  const Integer m = Integer(std::numeric_limits<long long>::min());
  CHECK((-m).to_string() == "9223372036854775808");
  CHECK(m / Integer(-1) == -m);
  CHECK(m % Integer(-1) == Integer(0));
}
