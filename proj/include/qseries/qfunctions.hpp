#pragma once

#include <vector>

#include "qseries/series.hpp"

namespace qs {

// sign * q^exponent; the argument form for the generalized theta f(a, b).
struct Monomial {
  int sign = 1;    // +1 or -1
  long exp = 0;    // may be <= 0

  Monomial() = default;
  Monomial(int s, long e) : sign(s), exp(e) {}
};

inline Monomial mono_mul(Monomial a, Monomial b) { return {a.sign * b.sign, a.exp + b.exp}; }
inline Monomial mono_div(Monomial a, Monomial b) { return {a.sign * b.sign, a.exp - b.exp}; }
inline Monomial mono_pow(Monomial a, long k) {
  return {(a.sign == -1 && k % 2 != 0) ? -1 : 1, a.exp * k};
}

// Product E(q^k)^e over the listed factors.
struct EtaQuotientSpec {
  std::vector<std::pair<long, long>> factors;  // (argument multiplier k, exponent e)
};

// Pi_{n>=1} (1 - q^{kn}) via the pentagonal number theorem.
Series euler_E(long k, long N);

// phi(q^k) = sum over all integers of q^{k n^2}.
Series phi(long k, long N);

// psi(q^k) = sum_{n>=0} q^{k n(n+1)/2}.
Series psi(long k, long N);

// f(a, b) = sum over n of a^{n(n+1)/2} b^{n(n-1)/2}; needs exp(a)+exp(b) > 0.
Series theta_f(Monomial a, Monomial b, long N);

Series eta_quotient(const EtaQuotientSpec& spec, long N);

// Rogers-Ramanujan products G(q), H(q).
Series rr_G(long N);
Series rr_H(long N);

// The n summands of the theta addition formula; their sum is theta_f(a, b).
std::vector<Series> addition_split(Monomial a, Monomial b, long n, long N);

}  // namespace qs
