#include "burgess/lemmas.hpp"

#include <cmath>
#include <numeric>

#include "doctest.h"

using namespace burgess;

namespace {

const SieveTables& tables() {
  static SieveTables t = SieveTables::build(200000);
  return t;
}

u64 phi_trial_division(u64 n) {
  u64 count = 0;
  for (u64 m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("sieve tables agree with trial division") {
  const SieveTables& t = tables();
  CHECK(t.phi[1] == 1);
  CHECK(t.mu[1] == 1);
  for (u64 n : {2ULL, 12ULL, 97ULL, 360ULL, 1024ULL, 99991ULL}) {
    CHECK(t.phi[n] == phi_trial_division(n));
  }
  CHECK(t.mu[6] == 1);
  CHECK(t.mu[30] == -1);
  CHECK(t.mu[12] == 0);
  // sum_{d|n} phi(d) = n, spot-checked
  for (u64 n : {12ULL, 100ULL, 6860ULL}) {
    u64 s = 0;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0) s += t.phi[d];
    CHECK(s == n);
  }
}

TEST_CASE("phi_ratio_sum") {
  InequalityReport r1 = phi_ratio_sum(tables(), 1.0);
  CHECK(r1.lhs == 1.0);
  CHECK(r1.rhs == doctest::Approx(6.0 / (consts::pi * consts::pi) + 1.0));
  CHECK(r1.holds());

  // ten-term oracle by trial division
  double expect = 0.0;
  for (u64 n = 1; n <= 10; ++n) expect += static_cast<double>(phi_trial_division(n)) / n;
  InequalityReport r10 = phi_ratio_sum(tables(), 10.0);
  CHECK(r10.lhs == doctest::Approx(expect).epsilon(1e-14));
  CHECK(r10.lhs == doctest::Approx(6.22381).epsilon(1e-5));
  CHECK(r10.rhs == doctest::Approx(9.382).epsilon(1e-3));
  CHECK(r10.holds());

  CHECK(phi_ratio_sum(tables(), 1e5).holds());
  CHECK_THROWS_AS(phi_ratio_sum(tables(), 1e7), precondition_error);
  CHECK_THROWS_AS(phi_ratio_sum(tables(), 0.5), precondition_error);
}

TEST_CASE("phi_n_sum") {
  InequalityReport r1 = phi_n_sum(tables(), 1.0);
  CHECK(r1.lhs == 1.0);
  CHECK(r1.holds());
  InequalityReport r5 = phi_n_sum(tables(), 5.0);
  CHECK(r5.lhs == 37.0);  // 1 + 2 + 6 + 8 + 20
  CHECK(r5.rhs == doctest::Approx(70.45).epsilon(1e-3));
  CHECK(r5.holds());
  CHECK(phi_n_sum(tables(), 1e5).holds());
}

TEST_CASE("log_sum") {
  InequalityReport r1 = log_sum(1.0);
  CHECK(r1.lhs == 0.0);
  CHECK(r1.rhs == 0.0);
  CHECK(r1.holds());
  InequalityReport r4 = log_sum(4.0);
  CHECK(r4.lhs == doctest::Approx(std::log(4.0) + std::log(2.0) + std::log(4.0 / 3.0)));
  CHECK(r4.rhs == 3.0);
  CHECK(r4.holds());
  CHECK(log_sum(1e6).holds());
}

TEST_CASE("mertens_tail") {
  InequalityReport r2 = mertens_tail(tables(), 2.0);
  CHECK(r2.lhs == doctest::Approx(std::fabs(6.0 / (consts::pi * consts::pi) - 0.75)).epsilon(1e-12));
  CHECK(r2.rhs == doctest::Approx(5.0 / 6.0));
  CHECK(r2.holds());
  InequalityReport r10 = mertens_tail(tables(), 10.0);
  CHECK(r10.lhs == doctest::Approx(0.008332).epsilon(1e-3));
  CHECK(r10.rhs == doctest::Approx(0.06).epsilon(1e-9));
  CHECK(r10.holds());
  CHECK(mertens_tail(tables(), 1e5).holds());
}

TEST_CASE("stronger small-range phi ratio bound on [2, 41]") {
  SweepSummary s = phi_ratio_strong_small_range();
  CHECK(s.checks == 40);
  CHECK(s.pass());
}

TEST_CASE("pair_count_check") {
  // n2 = 2 n1 in (0,5]^2: pairs (1,2) and (2,4)
  InequalityReport r = pair_count_check(1, 2, 0, 5, 7, 0);
  CHECK(r.lhs == 2.0);
  CHECK(r.rhs == doctest::Approx(3.5));
  CHECK(r.holds());

  // gcd(2,4) = 2 does not divide odd k, so no pairs at all
  InequalityReport odd = pair_count_check(2, 4, 3, 10, 23, 1);
  CHECK(odd.lhs == 0.0);
  CHECK(odd.holds());

  CHECK_THROWS_AS(pair_count_check(3, 3, 0, 5, 7, 0), precondition_error);
  CHECK_THROWS_AS(pair_count_check(1, 2, 0, 50, 7, 0), precondition_error);  // N >= p

  // randomized instances against a brute-force (n1, n2) double loop
  SplitMix64 rng(99);
  for (int i = 0; i < 60; ++i) {
    u64 p = 211;
    u64 a1 = rng.in_range(1, 20), a2 = rng.in_range(1, 20);
    if (a1 == a2) continue;
    i64 m = static_cast<i64>(rng.below(400)) - 200;
    u64 n = rng.in_range(1, 200);
    i64 kk = static_cast<i64>(rng.below(7)) - 3;
    u64 brute = 0;
    for (i64 n1 = m + 1; n1 <= m + static_cast<i64>(n); ++n1)
      for (i64 n2 = m + 1; n2 <= m + static_cast<i64>(n); ++n2)
        if (static_cast<i64>(a1) * n2 - static_cast<i64>(a2) * n1 == kk * static_cast<i64>(p))
          ++brute;
    InequalityReport rep = pair_count_check(a1, a2, m, n, p, kk);
    CHECK(rep.lhs == static_cast<double>(brute));
    CHECK(rep.holds());
  }
}

TEST_CASE("v_counts: identity, histogram, quadruple-count oracle") {
  VCountReport rep = v_counts(101, 5, 0, 20);
  CHECK(rep.v1 == 100);  // floor(A) * N

  // V2 equals the number of quadruples a1 n2 == a2 n1 (mod p) counted directly.
  u64 p = 97, A = 4, N = 30;
  i64 M = 11;
  VCountReport small = v_counts(p, A, M, N);
  u64 quadruples = 0;
  for (u64 a1 = 1; a1 <= A; ++a1)
    for (u64 a2 = 1; a2 <= A; ++a2)
      for (i64 n1 = M + 1; n1 <= M + static_cast<i64>(N); ++n1)
        for (i64 n2 = M + 1; n2 <= M + static_cast<i64>(N); ++n2) {
          i64 lhs = static_cast<i64>(a1) * n2 - static_cast<i64>(a2) * n1;
          if ((lhs % static_cast<i64>(p) + static_cast<i64>(p)) % static_cast<i64>(p) == 0)
            ++quadruples;
        }
  CHECK(small.v2 == quadruples);
  CHECK(static_cast<double>(small.v2) >= small.cauchy_schwarz_floor);

  u64 hist_sum = 0;
  for (const auto& [x, v] : small.histogram) {
    CHECK(v > 0);
    hist_sum += v;
  }
  CHECK(hist_sum == small.v1);

  CHECK_THROWS_AS(v_counts(101, 5, 0, 101), precondition_error);  // N >= p
}

TEST_CASE("v_counts: the two V2 bounds on their example instances") {
  VCountReport general = v_counts(10007, 28, 0, 400);
  CHECK(general.general_applicable);
  CHECK_FALSE(general.tight_applicable);  // 2AN = 22400 > 10007
  double expected_bound = 2.0 * 28 * 400 * (28.0 * 400 / 10007 + std::log(1.85 * 28));
  CHECK(general.v2_bound_general == doctest::Approx(expected_bound).epsilon(1e-12));
  CHECK(general.v2_bound_general == doctest::Approx(113492.0).epsilon(1e-4));
  CHECK(general.general_holds());

  VCountReport tight = v_counts(40009, 30, 7, 250);
  CHECK(tight.tight_applicable);  // 2AN = 15000 < 40009
  CHECK(tight.v2_bound_tight == doctest::Approx(2.0 * 30 * 250 * std::log(1.85 * 30)).epsilon(1e-12));
  CHECK(tight.tight_holds());
}

TEST_CASE("v_counts randomized property sweep") {
  SweepSummary s = v_counts_random(100000, 12, 12, 0x5eedULL);
  CHECK(s.checks == 72);  // 3 checks per instance
  CHECK(s.pass());
}

TEST_CASE("s_sums_check") {
  SSumsReport a2 = s_sums_check(2);
  CHECK(a2.s1_identity.lhs == 0.0);  // S1 = 3/2 = (3/4)4 - (3/4)2
  CHECK(a2.s1_identity.holds());

  SSumsReport a27 = s_sums_check(27);
  CHECK(a27.s3_asserted);
  CHECK(a27.s3.holds());
  CHECK(a27.s3.rhs ==
        doctest::Approx(6.0 / (consts::pi * consts::pi) * 27 * std::log(1.85 * 27) + 26.0));

  SSumsReport a50 = s_sums_check(50);
  CHECK(a50.s1_identity.holds());
  CHECK(a50.s2_asserted);
  CHECK(a50.s2.holds());
  CHECK(a50.s3.holds());

  CHECK_THROWS_AS(s_sums_check(1), precondition_error);
}

TEST_CASE("s_sums sweep to 500 keeps the S1 identity exact") {
  SweepSummary s = s_sums_sweep(500);
  CHECK(s.pass());
  // 499 identities + asserted S2/S3 rows
  CHECK(s.checks == 499 + (500 - 10) + (500 - 26));
}

TEST_CASE("zeta2 log-sum helper holds from A = 11") {
  SweepSummary s = zeta2_log_sum_check(11, 2000);
  CHECK(s.pass());
  // and the A = 11 margin is genuinely small (the first A where it holds is 10)
  CHECK(s.min_margin < 0.05);
}

TEST_CASE("lemma sweep over a modest exhaustive range") {
  SweepSummary s = lemma_sweep(tables(), 20000, true, 7);
  CHECK(s.pass());
  CHECK(s.checks > 4 * 20000);
}
