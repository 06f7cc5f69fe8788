#include "qseries/lambert.hpp"

#include <stdexcept>

#include "qseries/arith.hpp"

namespace qs::lambert {

namespace {

struct NormTerm {
  Rat scale;
  long num;
  long den;  // >= 0 after normalization
  int den_sign;
  int den_power;
};

// 1/(1 + s q^e) = s q^{-e} / (1 + s q^{-e}) for e < 0; for power p the
// prefactor is (s q^{-e})^p.
NormTerm normalize(Rat scale, long num, long den, int den_sign, int den_power) {
  if (den < 0) {
    if (den_sign == -1 && den_power % 2 != 0) scale = -scale;  // s^p prefactor
    num -= den_power * den;
    den = -den;
  }
  return {std::move(scale), num, den, den_sign, den_power};
}

int chi_value(const Character& c, long n) {
  switch (c.kind) {
    case Character::None: return 1;
    case Character::TopFixed: return arith::kronecker(c.v, n);
    case Character::BottomFixed: return arith::kronecker(n, c.v);
  }
  return 1;
}

void add_norm_term(Series& acc, const NormTerm& t) {
  long N = acc.order();
  if (t.den == 0) {
    if (t.den_sign == -1) throw std::domain_error("lambert: pole at zero denominator exponent");
    Rat half = t.scale / (t.den_power == 2 ? 4 : 2);
    if (t.num <= N) acc.at(t.num) += half;
    return;
  }
  for (long m = 0; t.num + m * t.den <= N; ++m) {
    Rat c = t.scale;
    if (t.den_sign == 1 && m % 2 != 0) c = -c;
    if (t.den_power == 2) c *= (m + 1);
    acc.at(t.num + m * t.den) += c;
  }
}

}  // namespace

void accumulate_term(Series& acc, const Rat& scale, long num, long den, int den_sign, int den_power) {
  add_norm_term(acc, normalize(scale, num, den, den_sign, den_power));
}

Series expand(const LambertSpec& spec, long N) {
  if (spec.den_power != 1 && spec.den_power != 2) throw std::invalid_argument("lambert: den_power must be 1 or 2");
  if (spec.den_sign != 1 && spec.den_sign != -1) throw std::invalid_argument("lambert: den_sign must be +-1");
  if (spec.weight != 0 && spec.weight != 1) throw std::invalid_argument("lambert: weight must be 0 or 1");

  std::vector<NormTerm> terms;
  auto push = [&](long n) {
    if (spec.odd_only && n % 2 == 0) return;
    Rat scale(chi_value(spec.character, n));
    if (scale == 0) return;
    if (spec.num_sign_alt && ((n % 2) + 2) % 2 == 1) scale = -scale;
    if (spec.weight == 1) scale *= n;
    if (scale == 0) return;
    terms.push_back(normalize(std::move(scale), spec.num_A * n + spec.num_B, spec.den_C * n + spec.den_D,
                              spec.den_sign, spec.den_power));
  };

  if (spec.range == Range::Unilateral) {
    if (spec.num_A < 1) throw std::domain_error("lambert: divergent spec");
    for (long n = 1; spec.num_A * n + spec.num_B <= N; ++n) {
      long den = spec.den_C * n + spec.den_D;
      if (den == 0 && spec.den_sign == -1) throw std::domain_error("lambert: pole at n");
      push(n);
    }
  } else {
    if (spec.den_C < 1 || spec.num_A <= 0 || spec.num_A >= spec.den_C)
      throw std::domain_error("lambert: divergent spec");
    if (spec.character.kind != Character::None)
      throw std::invalid_argument("lambert: character on a bilateral spec");
    for (long n = 0;; ++n) {
      long den = spec.den_C * n + spec.den_D;
      if (den == 0 && spec.den_sign == -1) throw std::domain_error("lambert: pole at n");
      if (den > 0 && spec.num_A * n + spec.num_B > N) break;
      push(n);
    }
    for (long n = -1;; --n) {
      long den = spec.den_C * n + spec.den_D;
      if (den == 0 && spec.den_sign == -1) throw std::domain_error("lambert: pole at n");
      long min_emitted = spec.num_A * n + spec.num_B - (den < 0 ? spec.den_power * den : 0);
      if (den < 0 && min_emitted > N) break;
      push(n);
    }
  }

  long min_exp = 0;
  for (const NormTerm& t : terms) min_exp = std::min(min_exp, t.num);
  Series acc(min_exp, N);
  for (const NormTerm& t : terms) add_norm_term(acc, t);
  return acc;
}

Series expand_sum(const std::vector<std::pair<Rat, LambertSpec>>& terms, const Rat& constant, long N) {
  Series acc = mul(Series::one(N), constant);
  for (const auto& [scalar, spec] : terms) acc += mul(expand(spec, N), scalar);
  return acc;
}

Series expand_quadratic(long A2, long A1, long A0, long C, long D, int den_sign, long N) {
  if (A2 <= 0) throw std::invalid_argument("expand_quadratic: quadratic coefficient must be positive");
  std::vector<NormTerm> terms;
  auto num_of = [&](long k) { return (A2 * k * k + A1 * k) / 2 + A0; };
  for (int dir : {+1, -1}) {
    for (long k = dir == 1 ? 0 : -1;; k += dir) {
      long num = num_of(k);
      long den = C * k + D;
      if (den == 0 && den_sign == -1) throw std::domain_error("expand_quadratic: pole");
      long min_emitted = num - (den < 0 ? den : 0);
      // exponents grow quadratically; stop once past the vertex and above N
      if (min_emitted > N && std::labs(k) > (std::labs(A1) + std::labs(C)) / A2 + 2) break;
      if (min_emitted <= N) terms.push_back(normalize(Rat(1), num, den, den_sign, 1));
    }
  }
  long min_exp = 0;
  for (const NormTerm& t : terms) min_exp = std::min(min_exp, t.num);
  Series acc(min_exp, N);
  for (const NormTerm& t : terms) add_norm_term(acc, t);
  return acc;
}

std::pair<Series, Series> onepsione_pair(long k, Monomial a, Monomial b, long N) {
  if (!(0 < a.exp && a.exp < k) || !(0 <= b.exp && b.exp < k))
    throw std::domain_error("onepsione_pair: monomial exponents out of range");
  auto neg = [](Monomial m) { return Monomial{-m.sign, m.exp}; };
  Monomial qk{1, k};
  Monomial ab = mono_mul(a, b);
  Series E = euler_E(k, N);
  Series num = mul(mul(mul(E, E), E), theta_f(neg(ab), neg(mono_div(qk, ab)), N));
  Series den = mul(theta_f(neg(a), neg(mono_div(qk, a)), N), theta_f(neg(b), neg(mono_div(qk, b)), N));
  Series lhs = divide(num, den);

  LambertSpec spec;
  spec.range = Range::Bilateral;
  spec.num_A = a.exp;
  spec.num_sign_alt = a.sign == -1;
  spec.den_C = k;
  spec.den_D = b.exp;
  spec.den_sign = -b.sign;
  Series rhs = expand(spec, N);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qs::lambert
