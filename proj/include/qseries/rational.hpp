#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace qs {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace qs
