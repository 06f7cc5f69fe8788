#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/arith.hpp"
#include "qseries/lambert.hpp"
#include "qseries/qfunctions.hpp"

using namespace qs;
using namespace qs::lambert;

namespace {

// brute-force expansion: geometric series for each summand, generous index range
Series brute(const LambertSpec& sp, long N) {
  Series acc(0, N);
  long lo = sp.range == Range::Bilateral ? -4 * N : 1;
  for (long n = lo; n <= 4 * N + 4; ++n) {
    if (n == 0 && sp.range == Range::Bilateral) {
      // the n = 0 summand: q^B / (1 + den_sign q^D)^p
      if (sp.den_D == 0 && sp.den_sign == 1) {
        Rat half = sp.den_power == 1 ? Rat(1, 2) : Rat(1, 4);
        if (sp.num_B <= N) acc.at(sp.num_B) += half;
        continue;
      }
    }
    if (sp.odd_only && ((n % 2) + 2) % 2 != 1) continue;
    long chi = 1;
    if (sp.character.kind == Character::TopFixed) chi = n > 0 ? arith::kronecker(sp.character.v, n) : 0;
    if (sp.character.kind == Character::BottomFixed) chi = arith::kronecker(n, sp.character.v);
    if (chi == 0) continue;
    Rat scale = Rat(chi);
    if (sp.weight == 1) scale *= n;
    if (sp.num_sign_alt && ((n % 2) + 2) % 2 == 1) scale = -scale;
    long num = sp.num_A * n + sp.num_B;
    long den = sp.den_C * n + sp.den_D;
    // expand scale * q^num / (1 + s q^den)^p with den of either sign
    if (den < 0) {
      // 1/(1+s q^-e) = s q^e/(1+s q^e) gives the mirrored form
      long e = -den;
      if (sp.den_sign == -1 && sp.den_power % 2 != 0) scale = -scale;
      num -= sp.den_power * e;
      den = e;
    }
    if (den == 0) {
      if (sp.den_sign == -1) continue;  // pole, excluded by the specs we test
      Rat v = scale;
      for (int i = 0; i < sp.den_power; ++i) v /= 2;
      if (num >= 0 && num <= N) acc.at(num) += v;
      continue;
    }
    if (num > N) continue;
    // (1 + s q^den)^{-p} = sum_k binom(-p, k) s^k q^{k den}
    for (long k = 0; num + k * den <= N; ++k) {
      Rat binom = 1;
      for (long i = 0; i < k; ++i) binom *= Rat(-(sp.den_power + i), i + 1);
      Rat term = scale * binom;
      if (sp.den_sign == -1 && k % 2 != 0) term = -term;
      if (num + k * den >= 0) acc.at(num + k * den) += term;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("unilateral expansions match brute force") {
  long N = 60;
  LambertSpec plain;  // sum q^n/(1+q^n)
  CHECK(equal_upto(expand(plain, N), brute(plain, N), N).equal);

  LambertSpec weighted;
  weighted.weight = 1;
  weighted.den_sign = -1;
  weighted.character = Character::bottom(5);
  CHECK(equal_upto(expand(weighted, N), brute(weighted, N), N).equal);

  LambertSpec odd;
  odd.odd_only = true;
  odd.den_power = 2;
  odd.den_sign = -1;
  odd.character = Character::bottom(3);
  CHECK(equal_upto(expand(odd, N), brute(odd, N), N).equal);

  LambertSpec topchar;
  topchar.character = Character::top(-20);
  topchar.den_sign = -1;
  CHECK(equal_upto(expand(topchar, N), brute(topchar, N), N).equal);

  LambertSpec stretched;  // sum q^{3n}/(1+q^{4n})
  stretched.num_A = 3;
  stretched.den_C = 4;
  CHECK(equal_upto(expand(stretched, N), brute(stretched, N), N).equal);

  LambertSpec alt;
  alt.num_sign_alt = true;
  CHECK(equal_upto(expand(alt, N), brute(alt, N), N).equal);
}

TEST_CASE("bilateral expansions match brute force") {
  long N = 50;
  LambertSpec b1;  // sum over all n of q^n/(1+q^{10n})
  b1.range = Range::Bilateral;
  b1.den_C = 10;
  CHECK(equal_upto(expand(b1, N), brute(b1, N), N).equal);

  LambertSpec b2;  // sum q^{5n+2}/(1+q^{10n+4})
  b2.range = Range::Bilateral;
  b2.num_A = 5;
  b2.num_B = 2;
  b2.den_C = 10;
  b2.den_D = 4;
  CHECK(equal_upto(expand(b2, N), brute(b2, N), N).equal);

  LambertSpec b3;  // sum q^{3n}/(1-q^{20n+5})
  b3.range = Range::Bilateral;
  b3.num_A = 3;
  b3.den_C = 20;
  b3.den_D = 5;
  b3.den_sign = -1;
  CHECK(equal_upto(expand(b3, N), brute(b3, N), N).equal);

  LambertSpec b4;  // alternating numerator signs
  b4.range = Range::Bilateral;
  b4.den_C = 10;
  b4.num_sign_alt = true;
  CHECK(equal_upto(expand(b4, N), brute(b4, N), N).equal);
}

TEST_CASE("accumulate_term handles negative and zero denominators") {
  long N = 30;
  Series a(0, N), b(0, N);
  // q^2/(1-q^-3) = -q^5/(1-q^3)
  accumulate_term(a, Rat(1), 2, -3, -1, 1);
  accumulate_term(b, Rat(-1), 5, 3, -1, 1);
  CHECK(equal_upto(a, b, N).equal);
  // q^4/(1+q^-2)^2 = q^8/(1+q^2)^2
  Series c(0, N), d(0, N);
  accumulate_term(c, Rat(1), 4, -2, 1, 2);
  accumulate_term(d, Rat(1), 8, 2, 1, 2);
  CHECK(equal_upto(c, d, N).equal);
  // den 0 with +1: an exact half
  Series e(0, N);
  accumulate_term(e, Rat(1), 3, 0, 1, 1);
  CHECK(e.coeff(3) == Rat(1, 2));
  // den 0 with -1 is a pole
  Series f(0, N);
  CHECK_THROWS(accumulate_term(f, Rat(1), 3, 0, -1, 1));
}

TEST_CASE("expand_sum combines terms with a constant") {
  long N = 40;
  LambertSpec s1, s2;
  s2.den_sign = -1;
  Series combo = expand_sum({{Rat(2), s1}, {Rat(-3), s2}}, Rat(7), N);
  Series ref = add_const(expand(s1, N) * Rat(2) + expand(s2, N) * Rat(-3), 7);
  CHECK(equal_upto(combo, ref, N).equal);
}

TEST_CASE("expand_quadratic matches brute force") {
  long N = 40;
  Series got = expand_quadratic(5, 3, 0, 5, 0, 1, N);
  Series ref(0, N);
  for (long k = -30; k <= 30; ++k) {
    long num = (5 * k * k + 3 * k) / 2;
    long den = 5 * k;
    Rat scale = 1;
    if (den < 0) {
      // 1/(1 + q^{-e}) = q^e/(1 + q^e); no sign change for den_sign = +1
      num += -den;
      den = -den;
    }
    if (den == 0) {
      if (num <= N) ref.at(num) += Rat(1, 2);
      continue;
    }
    for (long j = 0; num + j * den <= N; ++j) {
      if (num + j * den < 0) continue;
      ref.at(num + j * den) += j % 2 == 0 ? scale : -scale;
    }
  }
  CHECK(equal_upto(got, ref, N).equal);
}

TEST_CASE("onepsione pairs agree as series") {
  for (long N : {40L, 64L}) {
    auto [lhs, rhs] = onepsione_pair(10, {1, 1}, {-1, 0}, N);
    CHECK(equal_upto(lhs, rhs, N).equal);
    auto [l2, r2] = onepsione_pair(20, {1, 3}, {1, 5}, N);
    CHECK(equal_upto(l2, r2, N).equal);
  }
}
