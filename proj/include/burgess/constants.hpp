#pragma once

#include <optional>
#include <vector>

#include "burgess/common.hpp"
#include "burgess/report.hpp"

namespace burgess {

// Two families of explicit Burgess constants:
//   thm1: |S(M,N)| <= c1(r) N^{1-1/r} p^{(r+1)/4r^2} (log p)^{1/r},  any N;
//   thm2: |S(M,N)| <= c2(r) N^{1-1/r} p^{(r+1)/4r^2} (log p)^{1/2r},
//         valid for N <= 2 p^{1/2+1/4r}.
enum class Variant { thm1, thm2 };

const char* variant_name(Variant v);

// ((2r-3)!!(r-1))^{1/r}, the shift-length coefficient; 0 for r = 1.
double shift_coefficient(int r);

// B = ((2r-3)!!(r-1))^{1/r} p^{1/2r}, the optimal inner shift length.
double B_of(int r, double p);
double B_of_exp(int r, double log_p);

// One trial point of the constant computation. log p means natural log
// throughout; p0 is carried as a decimal exponent.
struct ConstantInputs {
  int r = 2;
  int p0_exponent = 7;
  Variant variant = Variant::thm1;
  double k = 0.0;
  double c_prime = 0.0;
  double s = 1.0;       // derived for r >= 3; 1 for r = 2
  double c_prev = 0.0;  // constant already settled for r-1 (required r >= 3)

  double log_p() const { return p0_exponent * consts::ln10; }
};

struct BurgessConstantResult {
  ConstantInputs inputs;
  double B = 0.0;
  double A_min = 0.0;
  double c = 0.0;
  bool feasible = false;
  bool boundary_constrained = false;  // c pinned by the floor(A) requirement
  bool worst_case_verified = false;   // formula decreased under larger A, B, p samples
  std::string infeasible_reason;
  std::optional<double> reference;  // published value, when tabulated
  std::optional<double> delta;      // c - reference
};

// Admissible k interval for a variant: thm1 [1/30, 1),
// thm2 [3/64, min{((2r-3)!!(r-1))^{1/r}/8, 1}).
std::pair<double, double> k_interval(int r, Variant v);

// Lower bound on A forced by the lower end of the N-range, via A = kN/B:
//   thm1: k c'^r p^{1/4-1/4r} log(p)   / ((2r-3)!!(r-1))^{1/r}
//   thm2: k c'^r p^{1/4-1/4r} sqrt(log p) / ((2r-3)!!(r-1))^{1/r}
double A_min_of(const ConstantInputs& in);

// Smallest admissible s with c(r-1) <= s^{1/r(r-1)} c(r'), clamped to >= 1.
double s_of(int r, double c_prev, double c_prime);

// Raw constant formulas evaluated at explicit (A, B, p); the callers pass
// the worst case A = A_min, B = B_of(r, p0), p = p0.
double c1_formula(int r, double A, double B, double log_p, double k, double s);
double c2_formula(int r, double A, double B, double log_p, double k, double s);

// Evaluates one row at the given inputs. Throws precondition_error when k
// is outside the admissible interval or floor(A) falls below 28 (thm1) /
// 30 (thm2); a non-positive denominator is reported as infeasible instead.
BurgessConstantResult c1_eval(const ConstantInputs& in);
BurgessConstantResult c2_eval(const ConstantInputs& in);
BurgessConstantResult evaluate_constant(const ConstantInputs& in);

// Minimizes c over k (grid step 1/600 plus golden-section refinement) with
// a fixed-point solve of c' = c at every k. c_prev is required for r >= 3.
BurgessConstantResult optimize_constant(int r, int p0_exponent, Variant v, double c_prev = 0.0);

// Chained rows r = 2..r_hi for one (variant, p0); returns rows r_lo..r_hi.
std::vector<BurgessConstantResult> optimize_rows(Variant v, int p0_exponent, int r_lo, int r_hi);

// Closed-form lower bound the constant must exceed so that floor(A) >= 28
// (thm1, at k = 1/30) or >= 30 (thm2, at k = 3/64).
double floor_a_lower_bound_c(int r, int p0_exponent, Variant v);

// B >= 15: checked at p0 = 10^7 for r in [2, 20], via the p-free
// inequality ((2r-3)!!(r-1))^{1/r} >= 15 for r in [21, r_max], plus the
// monotonicity of that coefficient in r.
std::vector<InequalityReport> verify_B_ge_15(int r_max);

// The r-free constant 2.74: evaluates the fixed-parameter envelope
// (B replaced by 15, k = 11/64, s = 1, A = k p^{1/4-1/4r} log p) for
// r in [4, r_max] and checks <= 2.74; rows r in {2, 3} are covered by the
// optimized thm1 constants at p0 = 10^7. Also the auxiliary chain
// 2.74^r > 2r >= ((2r-3)!!(r-1))^{1/r}.
std::vector<InequalityReport> corollary_274_check(double p0, int r_max);

// Range extension for thm2 with r >= 3: the induction's N upper bound
//   (2.6)^{2r/(r-1)} p^{3/8-1/8r-3/8r(r-1)} sqrt(log p)
// stays below 2 p^{1/2+1/4r} at p = 10^10 for r in [3, 21], and via the
// exponent-44/21 chain for r >= 22; monotone in p (sampled).
std::vector<InequalityReport> corollary_range_extension_check(int r_max);

// Published reference values (9 rows r = 2..10 per table).
std::optional<double> c1_reference(int r, int p0_exponent);       // p0 in {7, 10, 20}
std::optional<double> c2_reference(int r, int p0_exponent);       // p0 in {10, 15, 20}
struct FloorBoundReference {
  double value;
  int decimals;  // digits printed in the published table
};
std::optional<FloorBoundReference> floor_bound_reference(int r, int p0_exponent, Variant v);
std::optional<double> mcgown_reference(int r);  // C(r) for r in [2, 15], comparison only

// CSV/JSON emission of table rows, columns:
// variant,r,p0_exponent,k,c_prime,s,A_min,B,c,reference,delta
void write_constants_csv(std::ostream& os, const std::vector<BurgessConstantResult>& rows);
void write_constants_json(std::ostream& os, const std::vector<BurgessConstantResult>& rows);
void write_constants_text(std::ostream& os, const std::vector<BurgessConstantResult>& rows);

}  // namespace burgess
