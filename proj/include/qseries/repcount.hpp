#pragma once

#include <array>
#include <vector>

#include "qseries/series.hpp"

namespace qs::repcount {

// a x^2 + b x y + c y^2, positive definite.
struct BinaryForm {
  long a, b, c;
  bool positive_definite() const { return a > 0 && b * b - 4 * a * c < 0; }
};

struct DiagQuaternaryForm {
  std::array<long, 4> d;
};

long isqrt(long n);

// Theta series of Q: coefficient of q^n counts integer pairs with Q(x,y) = n.
Series bqf_theta(const BinaryForm& Q, long N);

// Theta series of d1 x1^2 + ... + d4 x4^2 over integer 4-tuples.
Series diag4_theta(const DiagQuaternaryForm& F, long N);

// Coefficient of q^n counts tuples of triangular numbers T_i with
// sum w_i T_i = n.
Series tri_theta(const std::vector<long>& weights, long N);

}  // namespace qs::repcount
