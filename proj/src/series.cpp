#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qs {

Series::Series(long min_exp, long order) : min_exp_(min_exp), order_(order) {
  if (order < min_exp) throw std::invalid_argument("series: order below min_exp");
  c_.resize(static_cast<size_t>(order - min_exp + 1));
}

Series Series::one(long order) {
  Series s(0, order);
  s.c_[0] = 1;
  return s;
}

Series Series::monomial(const Rat& coeff, long exp, long order) {
  Series s(std::min(exp, 0L), std::max(exp, order));
  s.at(exp) = coeff;
  return s;
}

const Rat& Series::coeff(long n) const {
  if (n < min_exp_ || n > order_) throw std::out_of_range("coeff: out of tracked range");
  return c_[static_cast<size_t>(n - min_exp_)];
}

Rat Series::coeff0(long n) const {
  if (n < min_exp_) return Rat(0);
  if (n > order_) throw std::out_of_range("coeff: out of tracked range");
  return c_[static_cast<size_t>(n - min_exp_)];
}

Rat& Series::at(long n) {
  if (n < min_exp_ || n > order_) throw std::out_of_range("at: out of tracked range");
  return c_[static_cast<size_t>(n - min_exp_)];
}

bool Series::is_integral() const {
  for (const Rat& r : c_)
    if (!is_integer(r)) return false;
  return true;
}

bool Series::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

std::vector<long> Series::nonzero_exponents() const {
  std::vector<long> out;
  for (long n = min_exp_; n <= order_; ++n)
    if (c_[static_cast<size_t>(n - min_exp_)] != 0) out.push_back(n);
  return out;
}

Series Series::shifted(long k) const {
  Series r = *this;
  r.min_exp_ += k;
  r.order_ += k;
  return r;
}

Series& Series::operator+=(const Series& rhs) {
  *this = add(*this, rhs);
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  *this = sub(*this, rhs);
  return *this;
}

Series& Series::operator*=(const Rat& scalar) {
  *this = mul(*this, scalar);
  return *this;
}

Series add(const Series& s, const Series& t) {
  long m = std::min(s.min_exp(), t.min_exp());
  long N = std::min(s.order(), t.order());
  Series r(m, N);
  for (long n = m; n <= N; ++n) r.at(n) = s.coeff0(n) + t.coeff0(n);
  return r;
}

Series sub(const Series& s, const Series& t) {
  long m = std::min(s.min_exp(), t.min_exp());
  long N = std::min(s.order(), t.order());
  Series r(m, N);
  for (long n = m; n <= N; ++n) r.at(n) = s.coeff0(n) - t.coeff0(n);
  return r;
}

Series mul(const Series& s, const Series& t) {
  // Every reported coefficient must be fully determined by tracked inputs.
  long m = s.min_exp() + t.min_exp();
  long N = std::min(s.order() + t.min_exp(), t.order() + s.min_exp());
  if (N < m) throw std::invalid_argument("mul: insufficient order");
  Series r(m, N);
  // Drive the convolution from the sparser operand.
  const Series* a = &s;
  const Series* b = &t;
  std::vector<long> nza = a->nonzero_exponents();
  std::vector<long> nzb = b->nonzero_exponents();
  if (nzb.size() < nza.size()) {
    std::swap(a, b);
    std::swap(nza, nzb);
  }
  for (long i : nza) {
    const Rat& ci = a->coeff(i);
    long jmax = std::min(b->order(), N - i);
    for (long j : nzb) {
      if (j > jmax) break;
      r.at(i + j) += ci * b->coeff(j);
    }
  }
  return r;
}

Series mul(const Series& s, const Rat& scalar) {
  Series r(s.min_exp(), s.order());
  for (long n = s.min_exp(); n <= s.order(); ++n) r.at(n) = s.coeff(n) * scalar;
  return r;
}

Series add_const(const Series& s, const Rat& c) {
  Series r = s;
  if (r.min_exp() > 0) {
    Series widened(0, r.order());
    for (long n = r.min_exp(); n <= r.order(); ++n) widened.at(n) = r.coeff(n);
    r = widened;
  }
  r.at(0) += c;
  return r;
}

Series divide(const Series& s, const Series& t) {
  long mb = t.min_exp();
  if (t.coeff(mb) == 0) throw std::domain_error("divide: zero leading coefficient");
  long ma = s.min_exp();
  long Da = s.order() - ma;
  long Db = t.order() - mb;
  long D = std::min(Da, Db);  // degrees of the unit quotient we can determine
  Series r(ma - mb, ma - mb + D);
  const Rat& lead = t.coeff(mb);
  std::vector<long> nz;  // offsets of nonzero divisor coefficients, excluding the lead
  for (long k = 1; k <= Db; ++k)
    if (t.coeff(mb + k) != 0) nz.push_back(k);
  for (long n = 0; n <= D; ++n) {
    Rat acc = s.coeff0(ma + n);
    for (long k : nz) {
      if (k > n) break;
      acc -= t.coeff(mb + k) * r.coeff(ma - mb + n - k);
    }
    r.at(ma - mb + n) = acc / lead;
  }
  return r;
}

Series invert(const Series& s) {
  long m = s.min_exp();
  return divide(Series::one(s.order() - m), s);
}

Series pow(const Series& s, long e) {
  if (e < 0) return invert(pow(s, -e));
  if (e == 0) return Series::one(s.order());
  Series r = s;
  for (long i = 1; i < e; ++i) r = mul(r, s);
  return r;
}

Series compose_power(const Series& s, long k) {
  if (k < 1) throw std::invalid_argument("compose_power: k must be positive");
  if (k == 1) return s;
  long m = s.min_exp() * k;
  long N = std::max(s.order(), m);
  Series r(std::min(m, 0L), N);
  for (long n = s.min_exp(); n <= s.order(); ++n) {
    if (k * n > N) break;
    r.at(k * n) = s.coeff(n);
  }
  return r;
}

Series negate_variable(const Series& s) {
  Series r = s;
  for (long n = s.min_exp(); n <= s.order(); ++n)
    if (((n % 2) + 2) % 2 == 1) r.at(n) = -r.at(n);
  return r;
}

Comparison equal_upto(const Series& s, const Series& t, long N) {
  if (s.order() < N || t.order() < N) throw std::invalid_argument("equal_upto: insufficient order");
  long m = std::min(s.min_exp(), t.min_exp());
  for (long n = m; n <= N; ++n)
    if (s.coeff0(n) != t.coeff0(n)) return {false, n};
  return {true, std::nullopt};
}

std::string to_string(const Series& s, long upto) {
  if (upto < 0 || upto > s.order()) upto = s.order();
  std::ostringstream os;
  bool first = true;
  for (long n = s.min_exp(); n <= upto; ++n) {
    const Rat& c = s.coeff(n);
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || n == 0) os << a.str();
    if (n != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (n != 1) os << "^" << n;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << (upto + 1) << ")";
  return os.str();
}

}  // namespace qs
