#include "burgess/weil.hpp"

#include <cmath>

#include "burgess/modmath.hpp"
#include "doctest.h"

using namespace burgess;

TEST_CASE("weil_moment: quadratic mod 5, B=2, r=2 enumerates to 18") {
  DirichletCharacter chi = DirichletCharacter::quadratic(5);
  WeilInnerSums sums = weil_inner_sums(chi, 2);
  REQUIRE(sums.exact);
  // inner sums over x = 0..4; residues mod 5 are {1,4}
  CHECK(sums.exact_inner == std::vector<i64>{0, -2, 0, 1, 1});
  CHECK(weil_moment(sums, 2) == 18.0);
}

TEST_CASE("weil_moment: B=1, r=1 gives p-1 for every non-principal character") {
  for (u64 p : {5ULL, 13ULL, 31ULL}) {
    auto group = CharacterGroup::build(p);
    for (u64 idx = 1; idx + 1 < p; ++idx) {
      DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
      CHECK(weil_moment(chi, 1, 1) == doctest::Approx(static_cast<double>(p - 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("weil_moment: quadratic mod 7, B=3, r=1 against an independent enumeration") {
  // Oracle via Euler's criterion, no character machinery.
  auto legendre = [](u64 n, u64 p) -> i64 {
    n %= p;
    if (n == 0) return 0;
    return pow_mod(n, (p - 1) / 2, p) == 1 ? 1 : -1;
  };
  double w = 0.0;
  for (u64 x = 0; x < 7; ++x) {
    i64 inner = legendre(x + 1, 7) + legendre(x + 2, 7) + legendre(x + 3, 7);
    w += static_cast<double>(inner * inner);
  }
  DirichletCharacter chi = DirichletCharacter::quadratic(7);
  CHECK(weil_moment(chi, 3, 1) == w);
}

TEST_CASE("weil_bound closed forms and precondition") {
  CHECK(weil_bound(5, 2.0, 2) == doctest::Approx(60.0 + 48.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(weil_bound(5, 1.0, 1) == doctest::Approx(5.0 + std::sqrt(5.0)).epsilon(1e-12));
  CHECK_THROWS_AS(weil_bound(7, 2.0, 19), precondition_error);  // r > 9B
  CHECK_NOTHROW(weil_bound(7, 2.0, 18));                        // r = 9B allowed
}

TEST_CASE("double factorial identity (2r-1)!! = (2r)!/(2^r r!)") {
  // Exact integers up to r = 16 fit in unsigned 128-bit.
  for (int r = 1; r <= 15; ++r) {  // exact-integer path ends at 15
    u128 fact2r = 1, fact_r = 1;
    for (int j = 1; j <= 2 * r; ++j) fact2r *= j;
    for (int j = 1; j <= r; ++j) fact_r *= j;
    u128 rhs = fact2r / ((static_cast<u128>(1) << r) * fact_r);
    CHECK(double_factorial_odd(r) == static_cast<double>(rhs));
  }
  for (int r = 16; r <= 20; ++r) {
    double lhs = log_double_factorial_odd(r);
    double rhs = std::lgamma(2.0 * r + 1.0) - r * std::log(2.0) - std::lgamma(r + 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("verify_weil_all") {
  std::vector<MomentReport> reports = verify_weil_all(5, 2, 2);
  CHECK(reports.size() == 3);
  for (const auto& rep : reports) CHECK(rep.holds());

  reports = verify_weil_all(7, 1, 2);
  CHECK(reports.size() == 5);
  for (const auto& rep : reports) CHECK(rep.holds());

  CHECK_THROWS_AS(verify_weil_all(4, 1, 1), precondition_error);  // not prime
  CHECK_THROWS_WITH_AS(verify_weil_all(10007, 1, 1, 10000), doctest::Contains("sampled"),
                       precondition_error);
}

TEST_CASE("weil_moment is invariant under conjugation") {
  auto group = CharacterGroup::build(31);
  for (u64 idx : {1ULL, 3ULL, 11ULL}) {
    DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
    DirichletCharacter conj = chi.conjugate();
    for (int r : {1, 2, 3}) {
      double a = weil_moment(chi, 4, r);
      double b = weil_moment(conj, 4, r);
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("W is at most p times the largest inner modulus to the 2r") {
  auto group = CharacterGroup::build(53);
  for (u64 idx : {2ULL, 9ULL, 26ULL}) {
    DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
    for (int B : {1, 3, 5}) {
      WeilInnerSums sums = weil_inner_sums(chi, B);
      double max_abs2 = 0.0;
      for (u64 x = 0; x < 53; ++x) {
        double a2;
        if (sums.exact) {
          a2 = static_cast<double>(sums.exact_inner[x] * sums.exact_inner[x]);
        } else {
          a2 = sums.acc[2 * x] * sums.acc[2 * x] + sums.acc[2 * x + 1] * sums.acc[2 * x + 1];
        }
        max_abs2 = std::max(max_abs2, a2);
      }
      for (int r : {1, 2, 3}) {
        CHECK(weil_moment(sums, r) <= 53.0 * std::pow(max_abs2, r) * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("principal character is rejected") {
  auto group = CharacterGroup::build(11);
  DirichletCharacter principal(group, 1, 0);
  CHECK_THROWS_AS(weil_inner_sums(principal, 2), precondition_error);
}

TEST_CASE("verify_weil_range over tiny range is clean") {
  WeilRangeSummary s = verify_weil_range(50, 3, {1, 2}, 1);
  CHECK(s.checks > 0);
  CHECK(s.failures == 0);
  CHECK(s.min_margin_rel > 0.0);
  // Deterministic under a different job count.
  WeilRangeSummary s2 = verify_weil_range(50, 3, {1, 2}, 4);
  CHECK(s2.checks == s.checks);
  CHECK(s2.min_margin_rel == s.min_margin_rel);
}
