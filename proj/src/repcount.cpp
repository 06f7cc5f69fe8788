#include "qseries/repcount.hpp"

#include <cmath>
#include <stdexcept>

namespace qs::repcount {

long isqrt(long n) {
  if (n < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Series bqf_theta(const BinaryForm& Q, long N) {
  if (!Q.positive_definite()) throw std::domain_error("bqf_theta: indefinite form");
  Series s(0, N);
  long disc = 4 * Q.a * Q.c - Q.b * Q.b;  // positive
  long ymax = isqrt(4 * Q.a * N / disc);
  for (long y = -ymax; y <= ymax; ++y) {
    // a x^2 + (b y) x + (c y^2 - n) = 0 has integer roots within the
    // bound |2a x + b y| <= sqrt(4 a N - disc y^2)
    long rad = 4 * Q.a * N - disc * y * y;
    if (rad < 0) continue;
    long half = isqrt(rad);
    long xlo = -(half + Q.b * y) / (2 * Q.a) - 2;
    long xhi = (half - Q.b * y) / (2 * Q.a) + 2;
    for (long x = xlo; x <= xhi; ++x) {
      long v = Q.a * x * x + Q.b * x * y + Q.c * y * y;
      if (v >= 0 && v <= N) s.at(v) += 1;
    }
  }
  return s;
}

Series diag4_theta(const DiagQuaternaryForm& F, long N) {
  for (long d : F.d)
    if (d < 1) throw std::invalid_argument("diag4_theta: weights must be positive");
  Series s(0, N);
  // enumerate x_i >= 0 and weight by the number of sign choices
  for (long x1 = 0; F.d[0] * x1 * x1 <= N; ++x1) {
    long r1 = N - F.d[0] * x1 * x1;
    long w1 = x1 == 0 ? 1 : 2;
    for (long x2 = 0; F.d[1] * x2 * x2 <= r1; ++x2) {
      long r2 = r1 - F.d[1] * x2 * x2;
      long w2 = w1 * (x2 == 0 ? 1 : 2);
      for (long x3 = 0; F.d[2] * x3 * x3 <= r2; ++x3) {
        long r3 = r2 - F.d[2] * x3 * x3;
        long w3 = w2 * (x3 == 0 ? 1 : 2);
        for (long x4 = 0; F.d[3] * x4 * x4 <= r3; ++x4) {
          long w4 = w3 * (x4 == 0 ? 1 : 2);
          s.at(N - r3 + F.d[3] * x4 * x4) += w4;
        }
      }
    }
  }
  return s;
}

Series tri_theta(const std::vector<long>& weights, long N) {
  for (long w : weights)
    if (w < 1) throw std::invalid_argument("tri_theta: weights must be positive");
  // recursive enumeration over triangular numbers with pruning
  Series s(0, N);
  std::vector<long> tri;
  for (long n = 0; n * (n + 1) / 2 <= N; ++n) tri.push_back(n * (n + 1) / 2);
  std::vector<long> partial(weights.size() + 1, 0);
  auto rec = [&](auto&& self, size_t i, long acc) -> void {
    if (i == weights.size()) {
      s.at(acc) += 1;
      return;
    }
    for (long t : tri) {
      long v = acc + weights[i] * t;
      if (v > N) break;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return s;
}

}  // namespace qs::repcount
