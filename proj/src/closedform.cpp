#include "qseries/closedform.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qs::closedform {

using arith::PrimeClassification;
using arith::Scheme;

namespace {

long check(long n) {
  if (n < 1) throw std::invalid_argument("closedform: n must be positive");
  return n;
}

PrimeClassification classify(Scheme s, long n) { return arith::classify(s, arith::factorize(n)); }

long prod_1pv(const std::vector<std::pair<long, int>>& v) {
  long r = 1;
  for (auto [p, e] : v) r *= 1 + e;
  return r;
}

// Pi (1 + (-1)^w)/2: one when every exponent is even, zero otherwise
long even_parity(const std::vector<std::pair<long, int>>& v) {
  for (auto [p, e] : v)
    if (e % 2 != 0) return 0;
  return 1;
}

int sgn_pow(long e) { return e % 2 == 0 ? 1 : -1; }

long ipow(long b, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

// Pi (1 - p^{v+1})/(1 - p) = Pi (1 + p + ... + p^v)
long geom_prod(const std::vector<std::pair<long, int>>& v, bool negate_base) {
  long r = 1;
  for (auto [p, e] : v) {
    long base = negate_base ? -p : p;
    long s = 0, pw = 1;
    for (int i = 0; i <= e; ++i, pw *= base) s += pw;
    r *= s;
  }
  return r;
}

}  // namespace

long r2(long n) {
  auto c = classify(Scheme::MOD4, check(n));
  return 4 * prod_1pv(c.p) * even_parity(c.q);
}

long rep_1_0_5(long n) {
  auto c = classify(Scheme::MOD20, check(n));
  return (1 + sgn_pow(c.alpha + c.t)) * prod_1pv(c.p) * even_parity(c.q);
}

long rep_2_2_3(long n) {
  auto c = classify(Scheme::MOD20, check(n));
  return (1 - sgn_pow(c.alpha + c.t)) * prod_1pv(c.p) * even_parity(c.q);
}

long rep_1_0_6(long n) {
  auto c = classify(Scheme::MOD24, check(n));
  return (1 + sgn_pow(c.alpha + c.beta + c.t)) * prod_1pv(c.p) * even_parity(c.q);
}

long rep_2_0_3(long n) {
  auto c = classify(Scheme::MOD24, check(n));
  return (1 - sgn_pow(c.alpha + c.beta + c.t)) * prod_1pv(c.p) * even_parity(c.q);
}

long rep_1_0_15(long n) {
  auto c = classify(Scheme::MOD15, check(n));
  return std::labs(c.alpha - 1) * (1 + sgn_pow(c.alpha + c.beta + c.b5 + c.t)) * prod_1pv(c.p) * even_parity(c.q);
}

long rep_3_0_5(long n) {
  auto c = classify(Scheme::MOD15, check(n));
  return std::labs(c.alpha - 1) * (1 - sgn_pow(c.alpha + c.beta + c.b5 + c.t)) * prod_1pv(c.p) * even_parity(c.q);
}

long cusp_d(long n) {
  auto c = classify(Scheme::CUBIC27, check(n));
  if (c.alpha != 0 || c.beta != 0) return 0;
  long r = prod_1pv(c.p) * even_parity(c.Q);
  for (auto [p, e] : c.q) r *= arith::kronecker(1 + e, 3);
  return r;
}

long rep_1_0_27(long n) {
  auto c = classify(Scheme::CUBIC27, check(n));
  if (check(n) % 6 == 1) {
    long kron = 1;
    for (auto [p, e] : c.q) kron *= arith::kronecker(1 + e, 3);
    long v = 2 * prod_1pv(c.p) * (prod_1pv(c.q) + 2 * kron) * even_parity(c.Q);
    if (v % 3 != 0) throw std::logic_error("rep_1_0_27: non-integral value");
    return v / 3;
  }
  // products here run over all primes = 1 (mod 3), split or not
  long base = prod_1pv(c.p) * prod_1pv(c.q) * even_parity(c.Q);
  if (c.beta >= 2) return (3 - 2 * (c.alpha == 0 ? 1 : 0)) * (1 + sgn_pow(c.alpha)) * base;
  if (c.beta == 0 && c.alpha > 0) return (1 + sgn_pow(c.alpha)) * base;
  return 0;
}

long rep_4_2_7(long n) { return rep_1_0_27(n) - 2 * cusp_d(n); }

long rep_quat(QuatKind which, long n) {
  auto c = classify(Scheme::QUINT, check(n));
  long g = c.alpha, d = c.b5, t = c.t;
  long prods = geom_prod(c.p, false) * geom_prod(c.q, true);
  switch (which) {
    case QuatKind::A:
      return sgn_pow(n - 1) * (1 + ipow(5, d) * sgn_pow(g + t)) * (5 + ipow(-2, g + 1)) / 3 * prods;
    case QuatKind::B:
      return sgn_pow(n - 1) * (1 + ipow(5, d + 1) * sgn_pow(g + t)) * (5 + ipow(-2, g + 1)) / 3 * prods;
    case QuatKind::C:
      return ipow(-2, g) * (-1 + ipow(5, d + 1) * sgn_pow(g + t)) * prods;
    case QuatKind::D:
      return ipow(-2, g) * (-1 + ipow(5, d) * sgn_pow(g + t)) * prods;
  }
  throw std::invalid_argument("rep_quat: bad kind");
}

long thm81_coeff(long n) {
  auto c = classify(Scheme::OCTIC81, check(n));
  if (c.alpha != 0) return 0;
  long r = prod_1pv(c.q) * even_parity(c.Q);
  // primes 5 mod 8 contribute 0, -1, 0, +1 cyclically in the exponent
  for (auto [p, e] : c.p) {
    if (e % 2 != 0) return 0;
    if (e % 4 == 2) r = -r;
  }
  for (auto [p, e] : c.P) r *= sgn_pow(e) * (1 + e);
  return r;
}

long williams_atilde(long n) {
  check(n);
  long v = 2 * arith::kronecker(-60, n);
  if (n % 2 == 0) v -= 2 * arith::kronecker(-60, n / 2);
  if (n % 4 == 0) v += 2 * arith::kronecker(-15, n / 4);
  return v;
}

long coeff_prime_power(PrimePowerFamily family, long p, long alpha) {
  if (!arith::is_prime(p)) throw std::invalid_argument("coeff_prime_power: p must be prime");
  if (alpha < 0) throw std::invalid_argument("coeff_prime_power: alpha must be nonnegative");
  if (alpha == 0) return 1;
  long parity = (1 + sgn_pow(alpha)) / 2;
  auto in = [&](std::initializer_list<long> rs, long mod) {
    for (long r : rs)
      if (p % mod == r) return true;
    return false;
  };
  switch (family) {
    case PrimePowerFamily::B315:
      if (p == 2 || p == 5) return 1;
      return in({1, 3, 7, 9}, 20) ? 1 + alpha : parity;
    case PrimePowerFamily::C316:
      if (p == 2) return sgn_pow(alpha);
      if (p == 5) return 1;
      if (in({1, 9}, 20)) return 1 + alpha;
      if (in({3, 7}, 20)) return sgn_pow(alpha) * (1 + alpha);
      return parity;
    case PrimePowerFamily::C440:
      if (p == 2 || p == 3) return 1;
      return in({1, 5, 7, 11}, 24) ? 1 + alpha : parity;
    case PrimePowerFamily::D441:
      if (p == 2 || p == 3) return sgn_pow(alpha);
      if (in({1, 7}, 24)) return 1 + alpha;
      if (in({5, 11}, 24)) return sgn_pow(alpha) * (1 + alpha);
      return parity;
    case PrimePowerFamily::C525:
      if (p == 2) return std::labs(alpha - 1);
      if (p == 3 || p == 5) return 1;
      return in({1, 2, 4, 8}, 15) ? 1 + alpha : parity;
    case PrimePowerFamily::D526:
      if (p == 2) return sgn_pow(alpha) * std::labs(alpha - 1);
      if (p == 3 || p == 5) return sgn_pow(alpha);
      if (in({1, 4}, 15)) return 1 + alpha;
      if (in({2, 8}, 15)) return sgn_pow(alpha) * (1 + alpha);
      return parity;
    case PrimePowerFamily::D618:
      if (p == 2 || p == 3) return 0;
      if (p % 3 == 1) return arith::cubic_residue_2(p) ? 1 + alpha : arith::kronecker(1 + alpha, 3);
      return parity;
  }
  throw std::invalid_argument("coeff_prime_power: bad family");
}

}  // namespace qs::closedform
