#include "qseries/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace qs::arith {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      f.factors.emplace_back(d, e);
    }
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

long modpow(long base, long exp, long mod) {
  unsigned long long r = 1;
  unsigned long long b = static_cast<unsigned long long>(((base % mod) + mod) % mod);
  while (exp > 0) {
    if (exp & 1) r = r * b % static_cast<unsigned long long>(mod);
    b = b * b % static_cast<unsigned long long>(mod);
    exp >>= 1;
  }
  return static_cast<long>(r);
}

namespace {

int legendre(long n, long p) {
  long r = ((n % p) + p) % p;
  if (r == 0) return 0;
  long e = modpow(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int kronecker_2(long n) {
  if (n % 2 == 0) return 0;
  long r = ((n % 8) + 8) % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

int kronecker(long n, long m) {
  if (m < 1) throw std::invalid_argument("kronecker: m must be positive");
  if (m == 1) return 1;
  int result = 1;
  for (auto [p, e] : factorize(m).factors) {
    int s = (p == 2) ? kronecker_2(n) : legendre(n, p);
    if (s == 0) return 0;
    if (e % 2 != 0 && s == -1) result = -result;
  }
  return result;
}

bool cubic_residue_2(long p) {
  if (p % 3 != 1 || !is_prime(p)) throw std::invalid_argument("cubic_residue_2: inapplicable prime");
  return modpow(2, (p - 1) / 3, p) == 1;
}

int quartic_class_2(long p) {
  if (p % 8 != 1 || !is_prime(p)) throw std::invalid_argument("quartic_class_2: inapplicable prime");
  long v = modpow(2, (p - 1) / 4, p);
  if (v == 1) return 1;
  if (v == p - 1) return -1;
  throw std::logic_error("quartic_class_2: unexpected residue");
}

PrimeClassification classify(Scheme scheme, const Factorization& f) {
  PrimeClassification c;
  c.scheme = scheme;
  c.n = f.n;
  for (auto [prime, e] : f.factors) {
    switch (scheme) {
      case Scheme::MOD4:
        if (prime == 2)
          c.alpha = e;
        else if (prime % 4 == 1)
          c.p.emplace_back(prime, e);
        else
          c.q.emplace_back(prime, e);
        break;
      case Scheme::MOD20: {
        if (prime == 2) {
          c.alpha = e;
          break;
        }
        if (prime == 5) {
          c.b5 = e;
          break;
        }
        long r = prime % 20;
        if (r == 1 || r == 3 || r == 7 || r == 9)
          c.p.emplace_back(prime, e);
        else
          c.q.emplace_back(prime, e);
        if (r == 3 || r == 7) c.t += e;
        break;
      }
      case Scheme::MOD24: {
        if (prime == 2) {
          c.alpha = e;
          break;
        }
        if (prime == 3) {
          c.beta = e;
          break;
        }
        long r = prime % 24;
        if (r == 1 || r == 5 || r == 7 || r == 11)
          c.p.emplace_back(prime, e);
        else
          c.q.emplace_back(prime, e);
        if (r == 5 || r == 11) c.t += e;
        break;
      }
      case Scheme::MOD15: {
        if (prime == 2) {
          c.alpha = e;
          break;
        }
        if (prime == 3) {
          c.beta = e;
          break;
        }
        if (prime == 5) {
          c.b5 = e;
          break;
        }
        long r = prime % 15;
        if (r == 1 || r == 2 || r == 4 || r == 8)
          c.p.emplace_back(prime, e);
        else
          c.q.emplace_back(prime, e);
        if (r == 2 || r == 8) c.t += e;
        break;
      }
      case Scheme::CUBIC27:
        if (prime == 2)
          c.alpha = e;
        else if (prime == 3)
          c.beta = e;
        else if (prime % 3 == 1) {
          if (cubic_residue_2(prime))
            c.p.emplace_back(prime, e);
          else
            c.q.emplace_back(prime, e);
        } else
          c.Q.emplace_back(prime, e);
        break;
      case Scheme::QUINT: {
        if (prime == 2) {
          c.alpha = e;
          break;
        }
        if (prime == 5) {
          c.b5 = e;
          break;
        }
        long r = prime % 5;
        if (r == 1 || r == 4)
          c.p.emplace_back(prime, e);
        else {
          c.q.emplace_back(prime, e);
          c.t += e;
        }
        break;
      }
      case Scheme::OCTIC81:
        if (prime == 2)
          c.alpha = e;
        else if (prime % 4 == 3)
          c.Q.emplace_back(prime, e);
        else if (prime % 8 == 5)
          c.p.emplace_back(prime, e);
        else if (quartic_class_2(prime) == 1)
          c.q.emplace_back(prime, e);
        else
          c.P.emplace_back(prime, e);
        break;
    }
  }
  return c;
}

namespace {

std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

long plain_divisor_sum(long n, Kernel kernel) {
  long acc = 0;
  for (long d : divisors(n)) {
    long co = n / d;
    int alt = (n + d) % 2 == 0 ? 1 : -1;
    long term = 0;
    switch (kernel) {
      case Kernel::K1: term = kronecker(-20, d); break;
      case Kernel::K2: term = kronecker(-4, d) * kronecker(co, 5); break;
      case Kernel::K3: term = kronecker(-24, d); break;
      case Kernel::K4: term = kronecker(d, 2) * kronecker(co, 3); break;
      case Kernel::K5: term = alt * kronecker(-15, co); break;
      case Kernel::K6: term = alt * kronecker(-3, d) * kronecker(5, co); break;
      case Kernel::K7: term = kronecker(d, 5) * d; break;
      case Kernel::K8: term = kronecker(-4, d); break;
      case Kernel::K9: term = alt * d * kronecker(d, 5); break;
      case Kernel::K10: term = alt * d * kronecker(co, 5); break;
      case Kernel::K11: term = d * kronecker(d, 5) * gamma_odd(co); break;
      case Kernel::K12: term = gamma_odd(d) * kronecker(d, 5) * co; break;
      case Kernel::K13: term = kronecker(d, 3); break;
    }
    acc += term;
  }
  return acc;
}

}  // namespace

long divisor_sum(long n, Kernel kernel) {
  if (n < 1) throw std::invalid_argument("divisor_sum: n must be positive");
  if (kernel == Kernel::K13) {
    long acc = 2 * plain_divisor_sum(n, Kernel::K13);
    if (n % 4 == 0) acc += 4 * plain_divisor_sum(n / 4, Kernel::K13);
    return acc;
  }
  return plain_divisor_sum(n, kernel);
}

Series hecke_u2(const Series& s) {
  long N = s.order() / 2;
  long m = s.min_exp() >= 0 ? (s.min_exp() + 1) / 2 : -((-s.min_exp()) / 2);
  if (N < m) throw std::invalid_argument("hecke_u2: insufficient order");
  Series r(std::min(m, 0L), N);
  for (long n = m; n <= N; ++n) r.at(n) = s.coeff0(2 * n);
  return r;
}

std::vector<std::pair<long, long>> check_multiplicative(const Series& coeffs, long N) {
  if (coeffs.order() < N) throw std::invalid_argument("check_multiplicative: insufficient order");
  if (coeffs.coeff0(1) != 1) throw std::domain_error("check_multiplicative: not normalized");
  std::vector<std::pair<long, long>> bad;
  for (long m = 2; m * 2 <= N; ++m)
    for (long n = m + 1; m * n <= N; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (coeffs.coeff0(m * n) != coeffs.coeff0(m) * coeffs.coeff0(n)) bad.emplace_back(m, n);
    }
  return bad;
}

}  // namespace qs::arith
