#pragma once

#include <unordered_map>

#include "burgess/common.hpp"
#include "burgess/report.hpp"
#include "burgess/sieve.hpp"

namespace burgess {

// Verified summatory bounds, all stated for real x >= 1:
//   phi_ratio_sum:  sum_{n<=x} phi(n)/n      <= (6/pi^2) x + log x + 1
//   phi_n_sum:      sum_{n<=x} n phi(n)      <= (2/pi^2) x^3 + x^2 log(x)/2 + x^2
//   log_sum:        sum_{d<=x} log(x/d)      <= x - 1
//   mertens_tail:   |6/pi^2 - sum_{d<=x} mu(d)/d^2| <= 1/(3x) + 8/(3x^2)   (x >= 2)
InequalityReport phi_ratio_sum(const SieveTables& t, double x);
InequalityReport phi_n_sum(const SieveTables& t, double x);
InequalityReport log_sum(double x);
InequalityReport mertens_tail(const SieveTables& t, double x);

// The strictly stronger small-range form of phi_ratio_sum,
//   sum_{n<=x} phi(n)/n <= (6/pi^2)(x-1) + log(x-1) + 1,
// checked exhaustively over integers 2 <= x <= 41.
SweepSummary phi_ratio_strong_small_range();

// Exact count of pairs (n1, n2) in (M, M+N]^2 with a1 n2 - a2 n1 = kk*p,
// against the bound N gcd(a1,a2)/max(a1,a2) + 1.
InequalityReport pair_count_check(u64 a1, u64 a2, i64 M, u64 N, u64 p, i64 kk);

// v(x) = #{(a, n) : 1 <= a <= A, M < n <= M+N, n == a x (mod p)} and its
// first two moments. Each V2 bound is attached only when its hypotheses
// hold:
//   general:  2AN (AN/p + log(1.85 A))   for 28 <= A < N/12, N < p
//   tight:    2AN log(1.85 A)            for A >= 30, N > 7A, 2AN < p
struct VCountReport {
  u64 p = 0;
  u64 A = 0;
  i64 M = 0;
  u64 N = 0;
  std::unordered_map<u64, u64> histogram;  // x -> v(x), nonzero entries only
  u64 v1 = 0;
  u64 v2 = 0;

  bool a_ge_28 = false, n_gt_12a = false, n_lt_p = false;
  bool a_ge_30 = false, n_gt_7a = false, two_an_lt_p = false;
  bool general_applicable = false, tight_applicable = false;
  double v2_bound_general = 0.0;  // valid iff general_applicable
  double v2_bound_tight = 0.0;    // valid iff tight_applicable
  double cauchy_schwarz_floor = 0.0;  // V1^2 / p <= V2 always

  bool general_holds() const { return static_cast<double>(v2) <= v2_bound_general; }
  bool tight_holds() const { return static_cast<double>(v2) <= v2_bound_tight; }
};

VCountReport v_counts(u64 p, u64 A, i64 M, u64 N);

// S1 = sum_{a1<a2<=A} (a1+a2)/max, S2 = sum (a1+a2)/gcd, S3 = sum gcd/max.
// S1 equals (3/4)A^2 - (3/4)A exactly (integer identity, checked as such);
// S2's bound is asserted for A >= 11 and S3's for A >= 27.
struct SSumsReport {
  u64 A = 0;
  InequalityReport s1_identity;  // lhs = |4*S1 - 3A(A-1)| in exact integers, rhs = 0
  InequalityReport s2;
  InequalityReport s3;
  bool s2_asserted = false;
  bool s3_asserted = false;
};

SSumsReport s_sums_check(u64 A);

// Exhaustive pass over integer x in [1, x_max] for the four summatory
// bounds (incremental running sums), with pseudo-random real x sampled
// between integers.
SweepSummary lemma_sweep(const SieveTables& t, u64 x_max, bool sample_reals, u64 seed);

// S-sum sweep: S1 identity for every A in [2, a_max], S2/S3 bounds wherever
// asserted. Columns are added incrementally so the whole range is O(A^2).
SweepSummary s_sums_sweep(u64 a_max);

// Randomized hypothesis-satisfying instances of the two V2 bounds plus the
// exact identity sum_x v(x) = A*N and the Cauchy-Schwarz floor.
SweepSummary v_counts_random(u64 p_max, u64 general_instances, u64 tight_instances, u64 seed);

// Unconstrained random (p, A, M, N): just the exact first-moment identity
// and the Cauchy-Schwarz floor, no bound hypotheses required.
SweepSummary v_identity_random(u64 p_max, u64 instances, u64 seed);

// (3/2) zeta(2) - (3/4) sum_{d<=A} log(d)/d^2 < 2 for every A in [a_min, a_max].
SweepSummary zeta2_log_sum_check(u64 a_min, u64 a_max);

}  // namespace burgess
