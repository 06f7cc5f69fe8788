#include "qseries/qfunctions.hpp"

#include <cmath>
#include <stdexcept>

namespace qs {

namespace {

long tri(long n) { return n * (n + 1) / 2; }  // exact for negative n too

int sign_pow(int s, long e) { return (s == -1 && e % 2 != 0) ? -1 : 1; }

}  // namespace

Series euler_E(long k, long N) {
  if (k < 1) throw std::invalid_argument("euler_E: k must be positive");
  Series s(0, N);
  for (long m = 0;; ++m) {
    long e = k * m * (3 * m - 1) / 2;
    long e2 = k * m * (3 * m + 1) / 2;
    if (e > N && e2 > N) break;
    int sgn = m % 2 == 0 ? 1 : -1;
    if (e <= N) s.at(e) += sgn;
    if (m > 0 && e2 <= N) s.at(e2) += sgn;
  }
  return s;
}

Series phi(long k, long N) {
  if (k < 1) throw std::invalid_argument("phi: k must be positive");
  Series s(0, N);
  s.at(0) = 1;
  for (long n = 1; k * n * n <= N; ++n) s.at(k * n * n) = 2;
  return s;
}

Series psi(long k, long N) {
  if (k < 1) throw std::invalid_argument("psi: k must be positive");
  Series s(0, N);
  for (long n = 0; k * tri(n) <= N; ++n) s.at(k * tri(n)) += 1;
  return s;
}

Series theta_f(Monomial a, Monomial b, long N) {
  long ssum = a.exp + b.exp;
  if (ssum <= 0) throw std::domain_error("theta_f: divergent theta");
  // e(n) = (ssum n^2 + (a-b) n)/2; beyond the bound every term exceeds N
  long bound = std::labs(a.exp - b.exp) / ssum + static_cast<long>(std::sqrt(2.0 * std::max(N, 0L) / ssum)) + 3;
  std::vector<std::pair<long, int>> terms;
  long min_e = 0;
  for (long n = -bound; n <= bound; ++n) {
    long e = a.exp * tri(n) + b.exp * tri(n - 1);
    if (e > N) continue;
    int sgn = sign_pow(a.sign, tri(n)) * sign_pow(b.sign, tri(n - 1));
    terms.emplace_back(e, sgn);
    if (e < min_e) min_e = e;
  }
  Series s(min_e, N);
  for (auto [e, sgn] : terms) s.at(e) += sgn;
  return s;
}

Series eta_quotient(const EtaQuotientSpec& spec, long N) {
  if (spec.factors.empty()) throw std::invalid_argument("eta_quotient: empty spec");
  Series num = Series::one(N);
  Series den = Series::one(N);
  for (auto [k, e] : spec.factors) {
    Series base = euler_E(k, N);
    for (long i = 0; i < std::labs(e); ++i)
      (e > 0 ? num : den) = mul(e > 0 ? num : den, base);
  }
  return divide(num, den);
}

namespace {

// 1 / Pi_{j <= N, j mod 5 in {r1, r2}} (1 - q^j)
Series rr_product(long r1, long r2, long N) {
  Series den = Series::one(N);
  for (long j = 1; j <= N; ++j) {
    if (j % 5 != r1 && j % 5 != r2) continue;
    for (long n = N; n >= j; --n) den.at(n) -= den.coeff(n - j);
  }
  return invert(den);
}

}  // namespace

Series rr_G(long N) { return rr_product(1, 4, N); }
Series rr_H(long N) { return rr_product(2, 3, N); }

std::vector<Series> addition_split(Monomial a, Monomial b, long n, long N) {
  if (n < 1) throw std::invalid_argument("addition_split: n must be positive");
  auto U = [&](long r) -> Monomial {
    return {sign_pow(a.sign, tri(r)) * sign_pow(b.sign, tri(r - 1)), a.exp * tri(r) + b.exp * tri(r - 1)};
  };
  auto V = [&](long r) -> Monomial {
    return {sign_pow(a.sign, tri(r - 1)) * sign_pow(b.sign, tri(r)), a.exp * tri(r - 1) + b.exp * tri(r)};
  };
  std::vector<Series> out;
  for (long r = 0; r < n; ++r) {
    Monomial ur = U(r);
    Monomial m1 = mono_div(U(n + r), ur);
    Monomial m2 = mono_div(V(n - r), ur);
    Series t = theta_f(m1, m2, std::max(N - ur.exp, 0L)).shifted(ur.exp);
    if (ur.sign == -1) t *= Rat(-1);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace qs
