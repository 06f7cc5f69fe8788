#pragma once

#include <utility>
#include <vector>

#include "qseries/qfunctions.hpp"
#include "qseries/series.hpp"

namespace qs::lambert {

enum class Range { Bilateral, Unilateral };

// Kronecker character attached to the summation index n:
//   TopFixed   -> (D/n)   with fixed discriminant D
//   BottomFixed-> (n/m)   with fixed modulus m
struct Character {
  enum Kind { None, TopFixed, BottomFixed } kind = None;
  long v = 0;

  static Character none() { return {}; }
  static Character top(long D) { return {TopFixed, D}; }
  static Character bottom(long m) { return {BottomFixed, m}; }
};

// One parameterized Lambert-type summand:
//   sum over n of chi(n) (-1)^{n?} n^{weight} q^{An+B} / (1 + den_sign q^{Cn+D})^{den_power}
struct LambertSpec {
  Range range = Range::Unilateral;
  long num_A = 1, num_B = 0;
  bool num_sign_alt = false;
  Character character{};
  int weight = 0;      // 0 or 1
  bool odd_only = false;
  long den_C = 1, den_D = 0;
  int den_sign = 1;    // +1 or -1
  int den_power = 1;   // 1 or 2
};

// Adds scale * q^num / (1 + den_sign q^den)^den_power to acc, truncated at the
// order of acc. Handles den < 0 by normalizing and den == 0 (den_sign = +1)
// as an exact rational half; den == 0 with den_sign = -1 is a pole.
void accumulate_term(Series& acc, const Rat& scale, long num, long den, int den_sign, int den_power);

Series expand(const LambertSpec& spec, long N);

Series expand_sum(const std::vector<std::pair<Rat, LambertSpec>>& terms, const Rat& constant, long N);

// Bilateral sum over k of q^{(A2 k^2 + A1 k)/2 + A0} / (1 + den_sign q^{Ck+D}),
// for the generalized Lambert series with quadratic numerator exponents.
Series expand_quadratic(long A2, long A1, long A0, long C, long D, int den_sign, long N);

// The specialized 1-psi-1 pairing with base q^k: lhs is the theta-quotient
// side, rhs the bilateral Lambert side; the two agree as series.
std::pair<Series, Series> onepsione_pair(long k, Monomial a, Monomial b, long N);

}  // namespace qs::lambert
