#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qseries/rational.hpp"

namespace qs {

// Truncated Laurent series in q with exact rational coefficients.
// Coefficients are tracked for exponents min_exp..order inclusive; below
// min_exp the series is identically zero, above order nothing is claimed.
class Series {
 public:
  Series() : min_exp_(0), order_(0), c_(1) {}
  Series(long min_exp, long order);

  static Series zero(long order) { return Series(0, order); }
  static Series one(long order);
  static Series monomial(const Rat& coeff, long exp, long order);

  long min_exp() const { return min_exp_; }
  long order() const { return order_; }

  // Exact coefficient; throws std::out_of_range outside the tracked range.
  const Rat& coeff(long n) const;
  // Zero below min_exp, throws above order.
  Rat coeff0(long n) const;
  Rat& at(long n);

  bool is_integral() const;
  bool is_zero() const;
  std::vector<long> nonzero_exponents() const;

  Series shifted(long k) const;  // multiply by q^k (exact)

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rat& scalar);

 private:
  long min_exp_;
  long order_;
  std::vector<Rat> c_;  // c_[n - min_exp_] is the coefficient of q^n
};

Series add(const Series& s, const Series& t);
Series sub(const Series& s, const Series& t);
Series mul(const Series& s, const Series& t);
Series mul(const Series& s, const Rat& scalar);
Series add_const(const Series& s, const Rat& c);

// s / t; the lowest tracked coefficient of t must be nonzero.
Series divide(const Series& s, const Series& t);
Series invert(const Series& s);

// Integer power; negative exponents go through invert.
Series pow(const Series& s, long e);

// q -> q^k
Series compose_power(const Series& s, long k);
// q -> -q
Series negate_variable(const Series& s);

struct Comparison {
  bool equal;
  std::optional<long> first_mismatch;
};

// Coefficientwise comparison for exponents <= N. Both series must track
// at least up to N.
Comparison equal_upto(const Series& s, const Series& t, long N);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Series& a, const Rat& c) { return mul(a, c); }
inline Series operator*(const Rat& c, const Series& a) { return mul(a, c); }

std::string to_string(const Series& s, long upto = -1);

}  // namespace qs
