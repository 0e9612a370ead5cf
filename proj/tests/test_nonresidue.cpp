#include "burgess/nonresidue.hpp"

#include <cmath>
#include <sstream>

#include "burgess/modmath.hpp"
#include "doctest.h"

using namespace burgess;

TEST_CASE("is_kth_residue") {
  CHECK(is_kth_residue(1, 7, 2));
  CHECK(is_kth_residue(2, 7, 2));        // 2 == 3^2 (mod 7)
  CHECK_FALSE(is_kth_residue(2, 13, 3));  // 2^4 == 3 != 1 (mod 13)
  CHECK_THROWS_AS(is_kth_residue(2, 7, 4), precondition_error);   // 4 does not divide 6
  CHECK_THROWS_AS(is_kth_residue(0, 7, 2), precondition_error);
  CHECK_THROWS_AS(is_kth_residue(7, 7, 2), precondition_error);
  CHECK_THROWS_AS(is_kth_residue(2, 8, 2), precondition_error);
}

TEST_CASE("least_nonresidue") {
  CHECK(least_nonresidue(7, 2) == 3);   // residues mod 7: {1, 2, 4}
  CHECK(least_nonresidue(13, 3) == 2);
  CHECK(least_nonresidue(5, 2) == 2);
  CHECK_THROWS_AS(least_nonresidue(7, 1), precondition_error);
  // least non-residue is prime, for a spread of (p, k)
  for (u64 p : {101ULL, 1009ULL, 39983ULL}) {
    for (u64 k : divisors(p - 1)) {
      if (k <= 1) continue;
      CHECK(is_prime(least_nonresidue(p, k)));
    }
  }
}

TEST_CASE("norton and grh bounds") {
  CHECK(norton_bound(13, 2) == doctest::Approx(0.9 * std::pow(13.0, 0.25) * std::log(13.0)));
  CHECK(norton_bound(7, 2) == doctest::Approx(1.1 * std::pow(7.0, 0.25) * std::log(7.0)));  // 7 = 3 mod 4
  CHECK(norton_bound(7, 3) == doctest::Approx(0.9 * std::pow(7.0, 0.25) * std::log(7.0)));
  CHECK(grh_bound(101) == doctest::Approx(2.0 * std::log(101.0) * std::log(101.0)));
}

TEST_CASE("scan_nonresidues") {
  ScanSummary quad = scan_nonresidues(5, 10000, 2);
  CHECK(quad.violations == 0);
  CHECK(quad.nonprime_g == 0);
  CHECK(quad.primes == 1227);  // pi(10^4) - 2, skipping p = 2, 3
  CHECK(quad.records == quad.primes);

  // p = 3 itself violates the 1.1 bound; reported, never asserted.
  ScanSummary tiny = scan_nonresidues(3, 3, 2);
  CHECK(tiny.records == 1);
  CHECK(tiny.violations == 1);

  // range handling: p_min = 5 excludes 3
  ScanSummary from5 = scan_nonresidues(5, 10, std::nullopt);
  CHECK(from5.primes == 2);  // 5 and 7

  ScanSummary all_k = scan_nonresidues(10000, 100000, std::nullopt);
  CHECK(all_k.violations == 0);
  CHECK(all_k.nonprime_g == 0);
  CHECK(all_k.max_g >= 2);
  CHECK(static_cast<double>(all_k.max_g) <= norton_bound(all_k.max_record.p, all_k.max_record.k));

  CHECK_THROWS_AS(scan_nonresidues(5, 2000000000ULL, 2), precondition_error);
}

TEST_CASE("scan CSV schema") {
  std::ostringstream os;
  write_scan_csv_header(os);
  ScanSummary s = scan_nonresidues(5, 20, std::nullopt,
                                   [&](const NonResidueRecord& rec) { write_scan_csv_row(os, rec); });
  CHECK(os.str().rfind("p,k,g,norton_bound,grh_bound,ok\n", 0) == 0);
  CHECK(s.records > 0);
}

TEST_CASE("prime reciprocal bounds") {
  PrimeRecipReports at286 = prime_recip_bounds(286.0);
  CHECK(at286.upper_asserted);
  CHECK(at286.upper.holds());
  CHECK(at286.upper.margin() > 0.0);
  CHECK(at286.lower.holds());
  CHECK(at286.pi_upper.holds());

  PrimeRecipReports at2 = prime_recip_bounds(2.0);
  CHECK_FALSE(at2.upper_asserted);
  CHECK(at2.lower.holds());  // 1/2 > loglog 2 + B - 1/(2 log^2 2)
  CHECK(at2.lower.rhs == doctest::Approx(0.5));
  CHECK(at2.pi_upper.holds());

  PrimeRecipReports big = prime_recip_bounds(1e6);
  CHECK(big.lower.holds());
  CHECK(big.upper.holds());
  CHECK(big.pi_upper.holds());

  CHECK_THROWS_AS(prime_recip_bounds(1.0), precondition_error);
}

TEST_CASE("prime reciprocal bounds are insensitive to 1e-10 shifts of the Mertens constant") {
  for (double x : {286.0, 12345.0, 99991.0}) {
    PrimeRecipReports base = prime_recip_bounds(x);
    for (double eps : {-1e-10, 1e-10}) {
      PrimeRecipReports shifted = prime_recip_bounds(x, consts::mertens_b + eps);
      CHECK(shifted.lower.holds() == base.lower.holds());
      CHECK(shifted.upper.holds() == base.upper.holds());
      CHECK(std::fabs(shifted.lower.margin() - base.lower.margin()) < 2e-10);
    }
  }
}

TEST_CASE("prime reciprocal interval bound") {
  CHECK(prime_recip_interval(10.0, 286.0).holds());
  CHECK(prime_recip_interval(100.0, 1e6).holds());
  // no primes in (286.5, 288.5]: left side 0
  InequalityReport empty = prime_recip_interval(286.5, 288.5);
  CHECK(empty.lhs == 0.0);
  CHECK(empty.holds());
  CHECK_THROWS_AS(prime_recip_interval(300.0, 200.0), precondition_error);
  CHECK_THROWS_AS(prime_recip_interval(10.0, 100.0), precondition_error);  // x < 286
}

TEST_CASE("prime reciprocal sweep") {
  SweepSummary s = prime_recip_sweep(20000, 3);
  CHECK(s.pass());
  CHECK(s.checks > 2 * 20000);
}

TEST_CASE("vinogradov_lower_bound") {
  CHECK(vinogradov_lower_bound(286.0, 0.5) > 0.0);
  CHECK(vinogradov_lower_bound(286.0, 1e-9) < 0.0);  // log1p(~0) leaves only the negative terms
  double x = 1e6, d = 0.01;
  double lx = std::log(x), ly = (consts::inv_sqrt_e + d) * lx;
  double expect = x * (2.0 * std::log1p(d * consts::sqrt_e) - 1.0 / (lx * lx) - 1.0 / (ly * ly) - 1.0 / x);
  CHECK(vinogradov_lower_bound(x, d) == doctest::Approx(expect).epsilon(1e-14));
  CHECK_THROWS_AS(vinogradov_lower_bound(100.0, 0.5), precondition_error);
}

TEST_CASE("vinogradov_chain_check") {
  // find a prime whose least quadratic non-residue is 11
  u64 p_found = 0;
  for (u64 p = 5; p < 100000; p += 2) {
    if (is_prime(p) && least_nonresidue(p, 2) == 11) {
      p_found = p;
      break;
    }
  }
  REQUIRE(p_found > 0);
  DirichletCharacter chi = DirichletCharacter::quadratic(p_found);
  InequalityReport r = vinogradov_chain_check(chi, 10.0, 20.0);
  CHECK(r.holds());

  // x = y: the prime sum is empty and S = floor(x) exactly
  InequalityReport eq = vinogradov_chain_check(chi, 10.0, 10.0);
  CHECK(eq.lhs == 10.0);
  CHECK(eq.rhs == 10.0);
  CHECK(eq.holds());

  // hypothesis violation: some n <= y has chi(n) != 1
  CHECK_THROWS_AS(vinogradov_chain_check(chi, 11.0, 20.0), hypothesis_error);
  CHECK_THROWS_AS(vinogradov_chain_check(chi, 10.0, static_cast<double>(p_found)), precondition_error);
}

TEST_CASE("vinogradov chain sweep over small p") {
  SweepSummary s = vinogradov_chain_sweep(20000);
  CHECK(s.checks > 100);
  CHECK(s.pass());
}

TEST_CASE("delta_of") {
  Rational sixth{1, 6};
  double d = delta_of(sixth, 22);
  CHECK(d >= 0.00458);
  CHECK(d < 0.00459);
  CHECK(d == doctest::Approx(1.0 / 6.0 / (0.25 + 1.0 / 44.0) - consts::inv_sqrt_e).epsilon(1e-14));
  CHECK_THROWS_AS(delta_of(sixth, 20), precondition_error);  // (1/6)/0.275 < 1/sqrt(e)
  // limit r -> infinity: delta -> 4 alpha - 1/sqrt(e)
  Rational a{152633, 1000000};  // just above 1/(4 sqrt(e)) + 0.001
  double big_r = delta_of(a, 1000000);
  CHECK(big_r == doctest::Approx(4.0 * a.value() - consts::inv_sqrt_e).epsilon(1e-4));
}

TEST_CASE("rational parsing stays exact") {
  Rational r = Rational::parse("1/6");
  CHECK(r.num == 1);
  CHECK(r.den == 6);
  CHECK(r.str() == "1/6");
  CHECK(Rational::parse("7").den == 1);
  CHECK(Rational::parse("-3/9").num == -3);
  CHECK_THROWS_AS(Rational::parse("1/0"), precondition_error);
  CHECK_THROWS_AS(Rational::parse("x"), precondition_error);
}

TEST_CASE("threshold solver finds the minimal exponent") {
  ThresholdResult t = threshold_solver(Rational{1, 6}, 22, 2.74);
  CHECK(t.exponent == 4732);
  CHECK(t.rhs_at_e > t.lhs_at_e);
  CHECK(t.rhs_prev <= t.lhs_prev);  // fails one decade down
  CHECK(t.delta == doctest::Approx(0.0045804514).epsilon(1e-6));

  std::ostringstream os;
  write_threshold_json(os, t);
  CHECK(os.str().find("\"exponent\": 4732") != std::string::npos);
  CHECK(os.str().find("\"alpha\": \"1/6\"") != std::string::npos);
}

TEST_CASE("threshold sweep: r = 22 is the best choice for alpha = 1/6") {
  ThresholdSweep sweep = threshold_sweep(Rational{1, 6}, 21, 40, 2.74);
  CHECK(sweep.best_r == 22);
  CHECK(sweep.best_exponent == 4732);
  for (const auto& row : sweep.rows) {
    CHECK(row.has_delta);  // every r >= 21 admits a positive delta at alpha = 1/6
    CHECK(row.exponent >= 4732);
  }
}
