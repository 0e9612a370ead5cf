#pragma once

#include <vector>

#include "burgess/character.hpp"
#include "burgess/common.hpp"

namespace burgess {

// One verified instance of the 2r-th moment bound
//   W = sum_{x mod p} |sum_{1<=b<=B} chi(x+b)|^{2r}
//     <= (2r-1)!! B^r p + (2r-1) B^{2r} sqrt(p),  valid for r <= 9B.
struct MomentReport {
  u64 p = 0;
  u64 group_index = 0;
  int B = 0;
  int r = 0;
  double W = 0.0;
  double bound = 0.0;
  bool exact = false;  // W computed in integer arithmetic (order <= 2)

  double margin() const { return bound - W; }
  double slack() const { return exact ? 0.0 : 1e-6 * bound; }
  bool holds() const { return margin() >= -slack(); }
};

// (2r-1)!!: exact integer product for r <= 15, exp of summed logs above.
double double_factorial_odd(int r);
double log_double_factorial_odd(int r);

// The right side of the moment bound, evaluated in log space.
// Throws precondition_error if r > 9B.
double weil_bound(u64 p, double B, int r);

// Inner sums over the shift window, cached per (chi, B) so that moments
// for several r reuse one pass.
struct WeilInnerSums {
  u64 p = 0;
  int B = 0;
  bool exact = false;
  std::vector<double> acc;       // interleaved (re, im) of inner(x), x in [0, p)
  std::vector<i64> exact_inner;  // inner(x) when order <= 2
};

WeilInnerSums weil_inner_sums(const DirichletCharacter& chi, int B);
// Extends cached sums from window length B to B+1 in place.
void weil_extend_inner_sums(const DirichletCharacter& chi, WeilInnerSums& sums);
double weil_moment(const WeilInnerSums& sums, int r);
double weil_moment(const DirichletCharacter& chi, int B, int r);

// One MomentReport per non-principal character mod p (all p-2 of them).
// Refuses p above the all-characters cap and suggests sampling instead.
std::vector<MomentReport> verify_weil_all(u64 p, int B, int r, u64 cap = 10000);

struct WeilRangeSummary {
  u64 checks = 0;
  u64 failures = 0;
  double min_margin_rel = 1e300;  // min (bound - W)/bound over all checks
  MomentReport worst{};

  bool pass() const { return failures == 0; }
};

// Moment bound over every prime p <= p_max, every non-principal chi,
// every B in [1, b_max], every r in rs with r <= 9B. Characters are
// checked in parallel; per-character results merge in index order.
WeilRangeSummary verify_weil_range(u64 p_max, int b_max, const std::vector<int>& rs, int jobs);

}  // namespace burgess
