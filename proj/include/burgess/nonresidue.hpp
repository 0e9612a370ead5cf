#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "burgess/character.hpp"
#include "burgess/common.hpp"
#include "burgess/report.hpp"

namespace burgess {

// n is a k-th power residue mod p iff n^{(p-1)/k} == 1 (mod p).
bool is_kth_residue(u64 n, u64 p, u64 k);

// g(p, k): smallest n >= 2 that is not a k-th power residue; exists for
// every k | p-1 with k > 1.
u64 least_nonresidue(u64 p, u64 k);

// 0.9 p^{1/4} log p, with constant 1.1 when k = 2 and p == 3 (mod 4).
double norton_bound(u64 p, u64 k);
// 2 log^2 p, the GRH-conditional reference bound.
double grh_bound(u64 p);

struct NonResidueRecord {
  u64 p = 0;
  u64 k = 0;
  u64 g = 0;
  double norton = 0.0;
  double grh = 0.0;
  bool ok = false;  // g <= norton bound
};

struct ScanSummary {
  u64 primes = 0;
  u64 records = 0;
  u64 violations = 0;    // g above the 0.9/1.1 bound; reported, never asserted here
  u64 nonprime_g = 0;    // count of composite least non-residues (expected 0)
  u64 max_g = 0;
  NonResidueRecord max_record{};
};

// Streams one record per (prime in [p_min, p_max], divisor k > 1 of p-1,
// or just k_filter when set and admissible) through sink in ascending-p
// order. p_max capped at 1e9 (segmented sieve range).
ScanSummary scan_nonresidues(u64 p_min, u64 p_max, std::optional<u64> k_filter,
                             const std::function<void(const NonResidueRecord&)>& sink = {});

void write_scan_csv_header(std::ostream& os);
void write_scan_csv_row(std::ostream& os, const NonResidueRecord& rec);

// Rosser-Schoenfeld style checks on sum_{p<=x} 1/p and pi(x):
//   lower:   loglog x + B - 1/(2 log^2 x) < sum        (x > 1)
//   upper:   sum < loglog x + B + 1/(2 log^2 x)        (x >= 286)
//   pi:      pi(x) < x/log(x) (1 + 3/(2 log x))        (x > 1)
// The Mertens constant enters as a parameter so sensitivity can be probed.
struct PrimeRecipReports {
  InequalityReport lower;
  InequalityReport upper;  // only asserted for x >= 286
  InequalityReport pi_upper;
  bool upper_asserted = false;
};
PrimeRecipReports prime_recip_bounds(double x, double mertens_b = consts::mertens_b);

// sum_{y < p <= x} 1/p < loglog x - loglog y + 1/(2 log^2 x) + 1/(2 log^2 y)
// for x > y > 1, x >= 286.
InequalityReport prime_recip_interval(double y, double x);

// All three Rosser-Schoenfeld checks for every integer x in [2, x_max]
// plus sampled reals in (1, 286) for the lower/pi bounds.
SweepSummary prime_recip_sweep(u64 x_max, u64 seed, double mertens_b = consts::mertens_b);

// x (2 log(delta sqrt(e) + 1) - 1/log^2 x - 1/log^2 y - 1/x) with
// y = x^{1/sqrt(e)+delta}; may be negative (the bound is then vacuous).
double vinogradov_lower_bound(double x, double delta);

// For chi with chi(n) = 1 on all n <= y (verified; hypothesis_error if
// not) and x < p: |S(0, floor(x))| >= floor(x) - 2 sum_{y<q<=x} floor(x/q)
// over primes q.
InequalityReport vinogradov_chain_check(const DirichletCharacter& chi, double y, double x);

// Runs the chain check for every prime p <= p_max with g(p,2) >= 7,
// y = g(p,2) - 1, and every integer x in (y, min(p-1, 3y)].
SweepSummary vinogradov_chain_sweep(u64 p_max);

// delta with x^{1/sqrt(e)+delta} = p^alpha at x = p^{1/4+1/2r}:
// delta = alpha/(1/4 + 1/(2r)) - 1/sqrt(e). Throws precondition_error
// when no positive delta exists.
double delta_of(const Rational& alpha, int r);

// Minimal decimal exponent E such that at p = 10^E the sum lower bound
//   2 log(delta sqrt(e)+1) - 1/log^2 x - 1/log^2 y - 1/x
// strictly exceeds c p^{loglog p/(r log p) - 1/4r^2}, where x = p^{1/4+1/2r}
// and y = p^alpha. At 10^{E-1} the comparison fails (minimality).
struct ThresholdResult {
  Rational alpha;
  int r = 0;
  double constant = 0.0;
  double delta = 0.0;
  i64 exponent = 0;
  double lhs_at_e = 0.0, rhs_at_e = 0.0;      // at p = 10^E
  double lhs_prev = 0.0, rhs_prev = 0.0;      // at p = 10^{E-1}
};
ThresholdResult threshold_solver(const Rational& alpha, int r, double constant, i64 e_max = 1000000);

void write_threshold_json(std::ostream& os, const ThresholdResult& t);

struct ThresholdSweepRow {
  int r = 0;
  bool has_delta = false;
  double delta = 0.0;
  i64 exponent = 0;
};
struct ThresholdSweep {
  std::vector<ThresholdSweepRow> rows;
  int best_r = 0;
  i64 best_exponent = 0;
};
ThresholdSweep threshold_sweep(const Rational& alpha, int r_lo, int r_hi, double constant);

}  // namespace burgess
