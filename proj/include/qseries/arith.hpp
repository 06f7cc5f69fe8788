#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qseries/series.hpp"

namespace qs::arith {

struct Factorization {
  long n = 1;
  std::vector<std::pair<long, int>> factors;  // (prime, exponent), primes increasing
};

bool is_prime(long n);
Factorization factorize(long n);
long modpow(long base, long exp, long mod);

// Kronecker symbol (n/m) for m >= 1.
int kronecker(long n, long m);

// Gauss' criterion: 2^((p-1)/3) == 1 (mod p); requires p == 1 (mod 3).
bool cubic_residue_2(long p);

// Value of 2^((p-1)/4) mod p, which is +-1 for p == 1 (mod 8).
int quartic_class_2(long p);

enum class Scheme { MOD4, MOD20, MOD24, MOD15, CUBIC27, QUINT, OCTIC81 };

// Per-scheme split of the prime factorization. Labels:
//   'p', 'q' and for the wider schemes 'P', 'Q' -- which residue/criterion
//   class each odd prime falls into; small primes land in the named counters.
struct PrimeClassification {
  Scheme scheme;
  long n = 1;
  long alpha = 0;  // exponent of 2
  long beta = 0;   // exponent of 3 (MOD24/MOD15/CUBIC27)
  long b5 = 0;     // exponent of 5 (MOD20/MOD15/QUINT)
  long t = 0;      // scheme-specific count, with multiplicity
  std::vector<std::pair<long, int>> p, q, P, Q;
};

PrimeClassification classify(Scheme scheme, const Factorization& f);

enum class Kernel {
  K1,   // (-20/d)
  K2,   // (-4/d)(n/d over 5)
  K3,   // (-24/d)
  K4,   // (d/2)(n/d over 3)
  K5,   // (-1)^(n+d) (-15 over n/d)
  K6,   // (-1)^(n+d) (-3/d)(5 over n/d)
  K7,   // (d/5) d
  K8,   // (-4/d)
  K9,   // (-1)^(n+d) d (d/5)
  K10,  // (-1)^(n+d) d (n/d over 5)
  K11,  // d (d/5) gamma(n/d)
  K12,  // gamma(d) (d/5) (n/d)
  K13,  // 2 sum (d/3) + 4 [4|n] sum over d|(n/4) of (d/3)
};

long divisor_sum(long n, Kernel kernel);

inline int gamma_odd(long n) { return n % 2 != 0 ? 1 : 0; }

// a(n) -> a(2n); input must track order >= 2 * target order.
Series hecke_u2(const Series& s);

// Pairs (m, n), coprime, mn <= N, with a(mn) != a(m) a(n); requires a(1) = 1.
std::vector<std::pair<long, long>> check_multiplicative(const Series& coeffs, long N);

}  // namespace qs::arith
