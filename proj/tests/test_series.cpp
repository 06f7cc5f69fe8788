#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/series.hpp"

using namespace qs;

namespace {

Series poly(std::vector<std::pair<long, long>> terms, long N, long min_exp = 0) {
  Series s(min_exp, N);
  for (auto [e, c] : terms) s.at(e) = c;
  return s;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
  Series s(0, 10);
  CHECK(s.min_exp() == 0);
  CHECK(s.order() == 10);
  CHECK(s.is_zero());
  s.at(3) = 5;
  CHECK(s.coeff(3) == 5);
  CHECK(s.coeff(4) == 0);
  CHECK_THROWS_AS((void)s.coeff(11), std::out_of_range);
  CHECK_THROWS_AS((void)s.coeff(-1), std::out_of_range);

  Series t(-2, 4);
  t.at(-2) = 7;
  CHECK(t.coeff(-2) == 7);
  CHECK(t.coeff0(-5) == 0);  // below min_exp: identically zero
  CHECK_THROWS_AS((void)t.coeff0(5), std::out_of_range);
}

TEST_CASE("factories") {
  CHECK(Series::zero(5).is_zero());
  CHECK(Series::one(5).coeff(0) == 1);
  Series m = Series::monomial(Rat(-3), 2, 6);
  CHECK(m.coeff(2) == -3);
  CHECK(m.coeff(0) == 0);
}

TEST_CASE("addition and subtraction") {
  Series a = poly({{0, 1}, {2, 3}}, 8);
  Series b = poly({{1, 4}, {2, -3}}, 8);
  Series c = a + b;
  CHECK(c.coeff(0) == 1);
  CHECK(c.coeff(1) == 4);
  CHECK(c.coeff(2) == 0);
  CHECK((a - a).is_zero());
  // order of a sum is the smaller of the two orders
  Series d = poly({{0, 1}}, 4) + poly({{0, 1}}, 9);
  CHECK(d.order() == 4);
}

TEST_CASE("multiplication matches manual convolution") {
  Series a = poly({{0, 1}, {1, 2}, {3, -1}}, 12);
  Series b = poly({{0, 3}, {2, 5}}, 12);
  Series c = mul(a, b);
  // (1 + 2q - q^3)(3 + 5q^2) = 3 + 6q + 5q^2 + 7q^3 - 5q^5
  CHECK(c.coeff(0) == 3);
  CHECK(c.coeff(1) == 6);
  CHECK(c.coeff(2) == 5);
  CHECK(c.coeff(3) == 7);
  CHECK(c.coeff(4) == 0);
  CHECK(c.coeff(5) == -5);
}

TEST_CASE("multiplication with shifted min_exp") {
  Series a = poly({{-1, 1}, {0, 1}}, 5, -1);
  Series b = poly({{1, 2}}, 5, 1);
  Series c = mul(a, b);
  CHECK(c.min_exp() == 0);
  CHECK(c.coeff(0) == 2);
  CHECK(c.coeff(1) == 2);
}

TEST_CASE("scalar operations") {
  Series a = poly({{1, 2}}, 4);
  CHECK((a * Rat(3, 2)).coeff(1) == Rat(3));
  CHECK(add_const(a, 7).coeff(0) == 7);
}

TEST_CASE("division and inversion") {
  Series a = poly({{0, 1}, {1, -4}, {2, 2}, {5, 1}}, 30);
  Series b = poly({{0, 2}, {3, 1}, {4, -1}}, 30);
  Series q = divide(mul(a, b), b);
  CHECK(equal_upto(q, a, 30).equal);
  Series inv = invert(b);
  Series one = mul(b, inv);
  CHECK(equal_upto(one, Series::one(30), 30).equal);
  CHECK_THROWS(divide(a, Series::zero(30)));
  CHECK_THROWS(divide(a, poly({{1, 1}}, 30)));  // zero leading coefficient at min_exp
}

TEST_CASE("powers") {
  Series a = poly({{0, 1}, {1, 1}}, 10);
  Series cube = pow(a, 3);
  CHECK(cube.coeff(0) == 1);
  CHECK(cube.coeff(1) == 3);
  CHECK(cube.coeff(2) == 3);
  CHECK(cube.coeff(3) == 1);
  CHECK(pow(a, 0).coeff(0) == 1);
  Series recip = pow(a, -2);
  CHECK(equal_upto(mul(recip, pow(a, 2)), Series::one(10), 10).equal);
}

TEST_CASE("compose_power is exact on the gaps") {
  Series a = poly({{0, 1}, {1, -1}, {2, 4}}, 9);
  Series c = compose_power(a, 3);
  CHECK(c.coeff(0) == 1);
  CHECK(c.coeff(1) == 0);
  CHECK(c.coeff(3) == -1);
  CHECK(c.coeff(6) == 4);
  CHECK_THROWS(compose_power(a, 0));
}

TEST_CASE("negate_variable flips odd exponents") {
  Series a = poly({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, 4);
  Series n = negate_variable(a);
  CHECK(n.coeff(0) == 1);
  CHECK(n.coeff(1) == -2);
  CHECK(n.coeff(2) == 3);
  CHECK(n.coeff(3) == -4);
}

TEST_CASE("shifted multiplies by a power of q") {
  Series a = poly({{0, 1}, {2, 5}}, 6);
  Series s = a.shifted(3);
  CHECK(s.min_exp() == 3);
  CHECK(s.order() == 9);
  CHECK(s.coeff(3) == 1);
  CHECK(s.coeff(5) == 5);
}

TEST_CASE("equal_upto") {
  Series a = poly({{0, 1}, {4, 2}}, 10);
  Series b = poly({{0, 1}, {4, 2}, {7, -1}}, 10);
  auto same = equal_upto(a, a, 10);
  CHECK(same.equal);
  CHECK(!same.first_mismatch);
  auto diff = equal_upto(a, b, 10);
  CHECK(!diff.equal);
  CHECK(*diff.first_mismatch == 7);
  CHECK_THROWS(equal_upto(a, poly({{0, 1}}, 5), 10));  // insufficient order
  // differing min_exp is fine as long as low coefficients agree
  Series c = poly({{-3, 0}, {0, 1}, {4, 2}}, 10, -3);
  CHECK(equal_upto(a, c, 10).equal);
}

TEST_CASE("integrality and exponent support") {
  Series a = poly({{1, 2}, {6, -3}}, 8);
  CHECK(a.is_integral());
  CHECK(a.nonzero_exponents() == std::vector<long>{1, 6});
  a.at(2) = Rat(1, 2);
  CHECK(!a.is_integral());
}

TEST_CASE("to_string") {
  Series a = poly({{0, 1}, {2, -3}}, 4);
  std::string t = to_string(a);
  CHECK(t.find("1") != std::string::npos);
  CHECK(t.find("q^2") != std::string::npos);
}
