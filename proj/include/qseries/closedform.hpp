#pragma once

#include "qseries/arith.hpp"

namespace qs::closedform {

// Representation counts by the binary forms, straight from the
// multiplicative formulas over the matching prime classification.
long r2(long n);                                    // x^2 + y^2
long rep_1_0_5(long n);
long rep_2_2_3(long n);
long rep_1_0_6(long n);
long rep_2_0_3(long n);
long rep_1_0_15(long n);
long rep_3_0_5(long n);
long rep_1_0_27(long n);
long rep_4_2_7(long n);

// Coefficient of q^n in q E(q^6) E(q^18); multiplicative.
long cusp_d(long n);

// Quaternary counts: A = phi phi^3(q^5), B = phi^3 phi(q^5),
// C = 4 q psi^3 psi(q^5), D = 4 q^2 psi psi^3(q^5).
enum class QuatKind { A, B, C, D };
long rep_quat(QuatKind which, long n);

// Coefficient of q^n in q E^4(q^16) / (E(q^32) E(q^8)).
long thm81_coeff(long n);

long williams_atilde(long n);

// Values of the multiplicative summatory functions at prime powers.
enum class PrimePowerFamily { B315, C316, C440, D441, C525, D526, D618 };
long coeff_prime_power(PrimePowerFamily family, long p, long alpha);

}  // namespace qs::closedform
