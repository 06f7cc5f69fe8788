// End-to-end acceptance checks; prints one line per criterion and exits
// nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "qseries/arith.hpp"
#include "qseries/closedform.hpp"
#include "qseries/qfunctions.hpp"
#include "qseries/registry.hpp"
#include "qseries/repcount.hpp"

using namespace qs;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = run();
  } catch (const std::exception& e) {
    err = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << " (" << ms << " ms)";
  if (!err.empty()) std::cout << " [" << err << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool three_way(long (*formula)(long), const repcount::BinaryForm& form, const Series& product, long N) {
  Series lattice = repcount::bqf_theta(form, N);
  for (long n = 1; n <= N; ++n) {
    Rat f(formula(n));
    if (f != lattice.coeff(n) || f != product.coeff(n)) {
      std::cout << "  mismatch for (" << form.a << "," << form.b << "," << form.c << ") at n=" << n << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::cout << std::unitbuf;

  criterion(1, "full identity catalog at order 512, no MUST_PASS failures", [] {
    auto t0 = std::chrono::steady_clock::now();
    auto reports = registry::verify_all(512, true);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : reports)
      if (r.status == "fail") std::cout << "  MUST_PASS failure: " << r.id << "\n";
    return registry::all_must_pass_ok(reports) && secs < 120;
  });

  criterion(2, "three-way representation counts to 20000 for all nine binary forms", [] {
    using namespace closedform;
    long N = 20000;
    Series eta34 = eta_quotient({{{2, 1}, {4, 1}, {5, 1}, {10, 1}, {1, -1}, {20, -1}}}, N);
    Series eta35 = eta_quotient({{{1, 1}, {2, 1}, {10, 1}, {20, 1}, {4, -1}, {5, -1}}}, N - 1).shifted(1);
    bool ok = true;
    ok &= three_way(r2, {1, 0, 1}, pow(phi(1, N), 2), N);
    ok &= three_way(rep_1_0_5, {1, 0, 5}, mul(phi(1, N), phi(5, N)), N);
    ok &= three_way(rep_2_2_3, {2, 2, 3}, eta34 - eta35, N);
    ok &= three_way(rep_1_0_6, {1, 0, 6}, mul(phi(1, N), phi(6, N)), N);
    ok &= three_way(rep_2_0_3, {2, 0, 3}, mul(phi(2, N), phi(3, N)), N);
    ok &= three_way(rep_1_0_15, {1, 0, 15}, mul(phi(1, N), phi(15, N)), N);
    ok &= three_way(rep_3_0_5, {3, 0, 5}, mul(phi(3, N), phi(5, N)), N);
    ok &= three_way(rep_1_0_27, {1, 0, 27}, mul(phi(1, N), phi(27, N)), N);
    Series lvl3 = (mul(phi(9, N), phi(27, N)) * Rat(3) + mul(phi(1, N), phi(3, N)) -
                   mul(phi(1, N), phi(27, N)) - mul(phi(3, N), phi(9, N))) *
                  Rat(1, 2);
    ok &= three_way(rep_4_2_7, {4, 2, 7}, lvl3, N);
    return ok;
  });

  criterion(3, "quaternary formulas match enumeration to 2000", [] {
    using closedform::QuatKind;
    long N = 2000;
    Series a = repcount::diag4_theta({{1, 5, 5, 5}}, N);
    Series b = repcount::diag4_theta({{1, 1, 1, 5}}, N);
    Series c = repcount::tri_theta({1, 1, 1, 5}, N);
    Series d = repcount::tri_theta({1, 5, 5, 5}, N);
    for (long n = 1; n <= N; ++n) {
      if (Rat(closedform::rep_quat(QuatKind::A, n)) != a.coeff(n)) return false;
      if (Rat(closedform::rep_quat(QuatKind::B, n)) != b.coeff(n)) return false;
      if (Rat(closedform::rep_quat(QuatKind::C, n)) != (n >= 1 ? 4 * c.coeff(n - 1) : Rat(0))) return false;
      if (Rat(closedform::rep_quat(QuatKind::D, n)) != (n >= 2 ? 4 * d.coeff(n - 2) : Rat(0))) return false;
    }
    return true;
  });

  criterion(4, "sign and vanishing patterns of the four quaternary series to 2000", [] {
    long N = 2000;
    Series b = mul(pow(phi(1, N), 3), phi(5, N));
    Series c = mul(pow(psi(1, N), 3), psi(5, N));
    Series a = mul(phi(1, N), pow(phi(5, N), 3));
    Series d = mul(psi(1, N), pow(psi(5, N), 3));
    for (long n = 0; n <= N; ++n) {
      if (!(b.coeff(n) > 0) || !(c.coeff(n) > 0)) return false;
      bool gap = n % 5 == 2 || n % 5 == 3;
      if ((a.coeff(n) == 0) != gap) return false;
      // triangular numbers lie in 0,1,3 mod 5, so psi(q)psi^3(q^5) hits
      // exactly those residues
      bool pos = n % 5 == 0 || n % 5 == 1 || n % 5 == 3;
      if ((d.coeff(n) > 0) != pos) return false;
    }
    return true;
  });

  criterion(5, "nonnegativity of the level 7 remainders to 1000", [] {
    long N = 1000;
    Series s1 = mul(pow(psi(1, N), 3), pow(psi(7, N), 3)) -
                divide(pow(euler_E(14, N), 7), euler_E(2, N)).shifted(1);
    Series s2 = mul(pow(phi(1, N), 3), pow(phi(7, N), 3)) + Series::monomial(Rat(1), 7, N) -
                divide(pow(euler_E(7, N), 7), euler_E(1, N)).shifted(2);
    for (long n = 0; n <= N; ++n)
      if (s1.coeff0(n) < 0 || s2.coeff0(n) < 0) return false;
    return true;
  });

  criterion(6, "closed form matches q E^4(q^16)/(E(q^32) E(q^8)) to 4096", [] {
    long N = 4096;
    Series s = eta_quotient({{{16, 4}, {32, -1}, {8, -1}}}, N - 1).shifted(1);
    for (long n = 1; n <= N; ++n)
      if (Rat(closedform::thm81_coeff(n)) != s.coeff(n)) return false;
    return true;
  });

  criterion(7, "multiplicativity of the twelve eta-quotient coefficient sequences to 2000", [] {
    long N = 2000;
    std::vector<Series> seqs;
    seqs.push_back(eta_quotient({{{2, 1}, {4, 1}, {5, 1}, {10, 1}, {1, -1}, {20, -1}}}, N));
    seqs.push_back(eta_quotient({{{1, 1}, {2, 1}, {10, 1}, {20, 1}, {4, -1}, {5, -1}}}, N - 1).shifted(1));
    seqs.push_back(eta_quotient({{{2, 1}, {3, 1}, {8, 1}, {12, 1}, {1, -1}, {24, -1}}}, N));
    seqs.push_back(eta_quotient({{{1, 1}, {4, 1}, {6, 1}, {24, 1}, {3, -1}, {8, -1}}}, N - 1).shifted(1));
    seqs.push_back(
        eta_quotient({{{2, 2}, {6, 1}, {10, 1}, {30, 2}, {1, -1}, {4, -1}, {15, -1}, {60, -1}}}, N));
    seqs.push_back(
        eta_quotient({{{2, 1}, {6, 2}, {10, 2}, {30, 1}, {3, -1}, {5, -1}, {12, -1}, {20, -1}}}, N - 1)
            .shifted(1));
    seqs.push_back(eta_quotient({{{2, 1}, {3, 1}, {5, 1}, {30, 1}, {6, -1}, {10, -1}}}, N - 1).shifted(1));
    seqs.push_back(
        eta_quotient({{{2, 5}, {10, 7}, {1, -1}, {4, -1}, {5, -3}, {20, -3}}}, N));
    seqs.push_back(
        eta_quotient({{{2, 7}, {10, 5}, {1, -3}, {4, -3}, {5, -1}, {20, -1}}}, N - 1).shifted(1));
    seqs.push_back(eta_quotient({{{1, 2}, {2, 1}, {10, 3}, {5, -2}}}, N - 1).shifted(1));
    seqs.push_back(eta_quotient({{{2, 3}, {5, 2}, {10, 1}, {1, -2}}}, N - 1).shifted(1));
    seqs.push_back(mul(euler_E(6, N - 1), euler_E(18, N - 1)).shifted(1));
    for (const auto& s : seqs)
      if (!arith::check_multiplicative(s, N).empty()) return false;
    return true;
  });

  criterion(8, "two-term recursion and prime trichotomy for the cusp coefficients", [] {
    long N = 2048;
    Series d = mul(euler_E(6, N - 1), euler_E(18, N - 1)).shifted(1);
    for (long p = 2; p <= 45; ++p) {
      if (!arith::is_prime(p)) continue;
      for (long ps = 1; ps * p * p <= N; ps *= p) {
        Rat lhs = d.coeff(ps * p * p);
        Rat rhs = d.coeff(p) * d.coeff(ps * p) - Rat(arith::kronecker(-108, p)) * d.coeff(ps);
        if (lhs != rhs) return false;
      }
    }
    for (long p = 2; p <= 200; ++p) {
      if (!arith::is_prime(p)) continue;
      long expect;
      if (p == 2 || p == 3 || p % 3 == 2)
        expect = 0;
      else
        expect = arith::cubic_residue_2(p) ? 2 : -1;
      if (d.coeff(p) != expect) return false;
    }
    return true;
  });

  criterion(9, "prime power tables match the divisor sums for p <= 100, alpha <= 4", [] {
    using arith::Kernel;
    using closedform::PrimePowerFamily;
    std::pair<PrimePowerFamily, Kernel> pairs[] = {
        {PrimePowerFamily::B315, Kernel::K1}, {PrimePowerFamily::C316, Kernel::K2},
        {PrimePowerFamily::C440, Kernel::K3}, {PrimePowerFamily::D441, Kernel::K4},
        {PrimePowerFamily::C525, Kernel::K5}, {PrimePowerFamily::D526, Kernel::K6}};
    for (long p = 2; p <= 100; ++p) {
      if (!arith::is_prime(p)) continue;
      long pa = 1;
      for (long a = 0; a <= 4; ++a, pa *= p) {
        for (auto [fam, kernel] : pairs)
          if (closedform::coeff_prime_power(fam, p, a) != arith::divisor_sum(pa, kernel)) return false;
        if (closedform::coeff_prime_power(PrimePowerFamily::D618, p, a) != closedform::cusp_d(pa)) return false;
      }
    }
    // ... and against the cusp-form series where it fits
    Series d = mul(euler_E(6, 2047), euler_E(18, 2047)).shifted(1);
    for (long p = 2; p <= 100; ++p) {
      if (!arith::is_prime(p)) continue;
      for (long pa = p, a = 1; pa <= 2048; pa *= p, ++a)
        if (Rat(closedform::coeff_prime_power(PrimePowerFamily::D618, p, a)) != d.coeff(pa)) return false;
    }
    return true;
  });

  criterion(10, "exploratory entries report without failing; U2 reading off by the constant only", [] {
    auto r1 = registry::verify("sec8.hecke_t2", 512);
    auto r2 = registry::verify("thm4_1.psi_product_form", 512);
    if (r1.status != "exploratory-fail" || r2.status != "exploratory-fail") return false;
    if (!r1.first_mismatch || *r1.first_mismatch != 0) return false;
    // direct check: coefficients 1..512 agree, only the constant differs
    long N = 512;
    Series src = add_const(
        eta_quotient({{{2, 2}, {6, 1}, {10, 1}, {30, 2}, {1, -1}, {4, -1}, {15, -1}, {60, -1}}}, 2 * N),
        Rat(-1));
    Series u2 = arith::hecke_u2(src);
    Series target = eta_quotient({{{6, 2}, {10, 2}, {2, -1}, {30, -1}}}, N);
    if (u2.coeff0(0) == target.coeff(0)) return false;
    for (long n = 1; n <= N; ++n)
      if (u2.coeff0(n) != target.coeff(n)) return false;
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
  return failures == 0 ? 0 : 1;
}
