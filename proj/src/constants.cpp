#include "burgess/constants.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "burgess/weil.hpp"

namespace burgess {

const char* variant_name(Variant v) { return v == Variant::thm1 ? "thm1" : "thm2"; }

double shift_coefficient(int r) {
  if (r < 1) throw precondition_error("shift_coefficient: r must be >= 1");
  if (r == 1) return 0.0;
  // (2r-3)!! has r-1 odd factors.
  double lg = (log_double_factorial_odd(r - 1) + std::log(static_cast<double>(r - 1))) / r;
  return std::exp(lg);
}

double B_of_exp(int r, double log_p) {
  if (r < 2) throw precondition_error("B_of: r must be >= 2");
  return std::exp(std::log(shift_coefficient(r)) + log_p / (2.0 * r));
}

double B_of(int r, double p) {
  if (p <= 0.0) throw precondition_error("B_of: p must be positive");
  return B_of_exp(r, std::log(p));
}

std::pair<double, double> k_interval(int r, Variant v) {
  if (v == Variant::thm1) return {1.0 / 30.0, 1.0};
  return {3.0 / 64.0, std::min(shift_coefficient(r) / 8.0, 1.0)};
}

double A_min_of(const ConstantInputs& in) {
  double lp = in.log_p();
  double range_factor = in.variant == Variant::thm1 ? lp : std::sqrt(lp);
  double p_pow = std::exp((0.25 - 0.25 / in.r) * lp);
  return in.k * std::exp(in.r * std::log(in.c_prime)) * p_pow * range_factor /
         shift_coefficient(in.r);
}

double s_of(int r, double c_prev, double c_prime) {
  if (r < 3) throw precondition_error("s_of: r must be >= 3");
  if (c_prev <= 0.0 || c_prime <= 0.0) throw precondition_error("s_of: constants must be positive");
  double s = std::exp(static_cast<double>(r) * (r - 1) * std::log(c_prev / c_prime));
  return std::max(1.0, s);
}

namespace {

// Shared head factor AB/((A-1)(B-1)) and error-term coefficient
//   (2r^2/(2r-1)^2) k^{1-1/r} ((A+1)(B+1)/AB)^{2-1/r} (AB/((A-1)(B-1))).
struct FormulaParts {
  double head;
  double err;
};

FormulaParts formula_parts(int r, double A, double B, double k) {
  FormulaParts f;
  f.head = (A / (A - 1.0)) * (B / (B - 1.0));
  double blowup = ((A + 1.0) * (B + 1.0)) / (A * B);
  double rr = static_cast<double>(r);
  f.err = (2.0 * rr * rr / ((2.0 * rr - 1.0) * (2.0 * rr - 1.0))) *
          std::pow(k, 1.0 - 1.0 / rr) * std::pow(blowup, 2.0 - 1.0 / rr) * f.head;
  return f;
}

double main_coefficient(int r) {
  // (2r(2r-1)((2r-3)!!(r-1))^{1/r}/(r-1))^{1/2r}
  double rr = static_cast<double>(r);
  double lg = std::log(2.0 * rr) + std::log(2.0 * rr - 1.0) + std::log(shift_coefficient(r)) -
              std::log(rr - 1.0);
  return std::exp(lg / (2.0 * rr));
}

constexpr double kTwelveQuarter = 1.8612097182041991;  // 12^{1/4}

}  // namespace

double c1_formula(int r, double A, double B, double log_p, double k, double s) {
  if (A <= 1.0 || B <= 1.0) return std::numeric_limits<double>::infinity();
  FormulaParts f = formula_parts(r, A, B, k);
  double denom = 1.0 - f.err;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  if (r == 2) {
    double bracket = 1.0 + 3.0 / (8.0 * k * log_p) + std::log(1.85 * k * log_p) / (k * log_p * log_p);
    return f.head * kTwelveQuarter * std::pow(bracket, 0.25) / denom;
  }
  double m = shift_coefficient(r);
  double rr = static_cast<double>(r);
  double p_pow = std::exp((0.5 - 0.5 / rr - 0.5 / (rr * (rr - 1.0))) * log_p);
  double bracket = s * s / (m * p_pow) + 1.0 / (4.0 * k * log_p) +
                   1.0 / (4.0 * rr * (rr - 1.0) * k * log_p) +
                   std::log(1.85 * s * k * log_p / m) / (k * log_p * log_p);
  return f.head * main_coefficient(r) * std::pow(bracket, 0.5 / rr) / denom;
}

double c2_formula(int r, double A, double B, double log_p, double k, double s) {
  if (A <= 1.0 || B <= 1.0) return std::numeric_limits<double>::infinity();
  FormulaParts f = formula_parts(r, A, B, k);
  double denom = 1.0 - f.err;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  if (r == 2) {
    return f.head * kTwelveQuarter * std::pow(3.0 / (8.0 * k), 0.25) / denom;
  }
  double m = shift_coefficient(r);
  double rr = static_cast<double>(r);
  double bracket = std::log(1.85 * s * k * std::sqrt(log_p) / m) / (k * log_p) +
                   1.0 / (4.0 * k) + 1.0 / (4.0 * rr * (rr - 1.0) * k);
  return f.head * main_coefficient(r) * std::pow(bracket, 0.5 / rr) / denom;
}

namespace {

double raw_formula(const ConstantInputs& in, double A, double B, double log_p) {
  return in.variant == Variant::thm1 ? c1_formula(in.r, A, B, log_p, in.k, in.s)
                                     : c2_formula(in.r, A, B, log_p, in.k, in.s);
}

// The evaluation point (A = A_min, B = B_of(r, p0), p = p0) must dominate:
// the formula is nonincreasing in A and in B separately, and nonincreasing
// in p along the joint curve (A_min(p), B(p), p) that the proof uses. The
// bracket's log term alone can grow with p, so the joint curve is the
// meaningful direction; all three are sampled, not assumed.
bool verify_worst_case(const ConstantInputs& in, double A, double B, double c_base) {
  double lp = in.log_p();
  const double tol = 1e-12 * std::max(1.0, c_base);
  for (double fa : {1.2, 2.0, 8.0})
    if (raw_formula(in, A * fa, B, lp) > c_base + tol) return false;
  for (double fb : {1.5, 4.0})
    if (raw_formula(in, A, B * fb, lp) > c_base + tol) return false;
  double m = shift_coefficient(in.r);
  for (double flp : {1.1, 1.5, 2.0, 4.0, 10.0}) {
    double lp2 = lp * flp;
    double range_factor = in.variant == Variant::thm1 ? lp2 : std::sqrt(lp2);
    double a2 = in.k * std::exp(in.r * std::log(in.c_prime)) *
                std::exp((0.25 - 0.25 / in.r) * lp2) * range_factor / m;
    double b2 = B_of_exp(in.r, lp2);
    if (raw_formula(in, a2, b2, lp2) > c_base + tol) return false;
  }
  return true;
}

BurgessConstantResult eval_common(const ConstantInputs& in_given, int a_floor) {
  ConstantInputs in = in_given;
  auto [k_lo, k_hi] = k_interval(in.r, in.variant);
  if (in.k < k_lo || in.k >= k_hi)
    throw precondition_error("constant evaluation: k outside the admissible interval");
  if (in.r < 2) throw precondition_error("constant evaluation: r must be >= 2");
  if (in.r >= 3) {
    if (in.c_prev <= 0.0)
      throw precondition_error("constant evaluation: c_prev required for r >= 3");
    in.s = s_of(in.r, in.c_prev, in.c_prime);
  } else {
    in.s = 1.0;
  }

  BurgessConstantResult res;
  res.inputs = in;
  res.B = B_of_exp(in.r, in.log_p());
  res.A_min = A_min_of(in);
  if (res.A_min - 1.0 < static_cast<double>(a_floor))
    throw precondition_error("constant evaluation: floor(A) requirement not met");
  res.c = raw_formula(in, res.A_min, res.B, in.log_p());
  if (!std::isfinite(res.c)) {
    res.feasible = false;
    res.infeasible_reason = "non-positive denominator";
    return res;
  }
  res.feasible = res.c > 1.0;
  if (!res.feasible) res.infeasible_reason = "constant did not exceed 1";
  res.worst_case_verified = verify_worst_case(in, res.A_min, res.B, res.c);
  return res;
}

}  // namespace

BurgessConstantResult c1_eval(const ConstantInputs& in) {
  if (in.variant != Variant::thm1) throw precondition_error("c1_eval: variant must be thm1");
  return eval_common(in, 28);
}

BurgessConstantResult c2_eval(const ConstantInputs& in) {
  if (in.variant != Variant::thm2) throw precondition_error("c2_eval: variant must be thm2");
  return eval_common(in, 30);
}

BurgessConstantResult evaluate_constant(const ConstantInputs& in) {
  return in.variant == Variant::thm1 ? c1_eval(in) : c2_eval(in);
}

namespace {

struct FixedPointOutcome {
  bool feasible = false;
  bool boundary = false;
  double c = std::numeric_limits<double>::infinity();
  double c_prime = 0.0;
  double s = 1.0;
  double A_min = 0.0;
  std::string reason;
};

// Per-k solve. The smallest claimable constant at this k is either the
// fixed point of c' -> c(c') or, when that fixed point would violate
// floor(A) >= a_floor, the boundary value where A_min - 1 = a_floor hits
// exactly (the formula then yields c(c'_b) <= c'_b, so claiming c'_b is
// consistent).
FixedPointOutcome solve_fixed_point(int r, int p0_exp, Variant v, double k, double c_prev,
                                    int a_floor) {
  FixedPointOutcome out;
  ConstantInputs in;
  in.r = r;
  in.p0_exponent = p0_exp;
  in.variant = v;
  in.k = k;
  in.c_prev = c_prev;
  double lp = in.log_p();
  double B = B_of_exp(r, lp);
  double m = shift_coefficient(r);
  double range_factor = v == Variant::thm1 ? lp : std::sqrt(lp);
  double p_pow = std::exp((0.25 - 0.25 / r) * lp);
  double a_of = k * p_pow * range_factor / m;  // A_min = a_of * c'^r

  double boundary_c = std::exp(std::log((a_floor + 1.0) / a_of) / r);

  auto step = [&](double c_prime) {
    in.c_prime = c_prime;
    in.s = r >= 3 ? s_of(r, c_prev, c_prime) : 1.0;
    double A = a_of * std::exp(r * std::log(c_prime));
    return raw_formula(in, A, B, lp);
  };

  double f_b = step(boundary_c);
  if (!std::isfinite(f_b)) {
    out.reason = "non-positive denominator";
    return out;
  }
  if (f_b <= boundary_c) {
    out.feasible = boundary_c > 1.0;
    out.boundary = true;
    out.c = boundary_c;
    out.c_prime = boundary_c;
    out.s = in.s;
    out.A_min = a_of * std::exp(r * std::log(boundary_c));
    if (!out.feasible) out.reason = "constant did not exceed 1";
    return out;
  }
  // F(c') is strictly decreasing in c' (larger c' only enlarges A and
  // shrinks s), so F(c') - c' has a single root above the boundary. The
  // naive c' <- c update can 2-cycle when the s feedback is strong, so
  // bracket the root and bisect; iterates with c' > c stay on the hi side.
  double lo = boundary_c;           // F(lo) > lo
  double hi = std::max(f_b, 2.0 * boundary_c);
  for (int grow = 0; grow < 200; ++grow) {
    double f_hi = step(hi);
    if (!std::isfinite(f_hi)) {
      out.reason = "non-positive denominator";
      return out;
    }
    if (f_hi <= hi) break;
    lo = hi;
    hi *= 2.0;
  }
  double c = step(lo);
  for (int iter = 0; iter < 200 && std::fabs(c - lo) >= 1e-6; ++iter) {
    double mid = 0.5 * (lo + hi);
    double f_mid = step(mid);
    if (!std::isfinite(f_mid)) {
      out.reason = "non-positive denominator";
      return out;
    }
    if (f_mid >= mid) {
      lo = mid;
      c = f_mid;
    } else {
      hi = mid;
    }
  }
  if (std::fabs(c - lo) >= 1e-6) {
    out.reason = "fixed point did not converge within 200 iterations";
    return out;
  }
  double c_prime = lo;
  in.c_prime = c_prime;
  in.s = r >= 3 ? s_of(r, c_prev, c_prime) : 1.0;
  double A = a_of * std::exp(r * std::log(c_prime));
  if (A - 1.0 < static_cast<double>(a_floor)) {
    out.reason = "floor(A) requirement not met at the fixed point";
    return out;
  }
  out.feasible = c > 1.0;
  out.c = c;
  out.c_prime = c_prime;
  out.s = in.s;
  out.A_min = A;
  if (!out.feasible) out.reason = "constant did not exceed 1";
  return out;
}

}  // namespace

BurgessConstantResult optimize_constant(int r, int p0_exponent, Variant v, double c_prev) {
  if (r < 2) throw precondition_error("optimize_constant: r must be >= 2");
  if (r >= 3 && c_prev <= 0.0)
    throw precondition_error("optimize_constant: c_prev required for r >= 3");
  int a_floor = v == Variant::thm1 ? 28 : 30;
  auto [k_lo, k_hi] = k_interval(r, v);
  constexpr double kStep = 1.0 / 600.0;

  double best_k = 0.0;
  FixedPointOutcome best;
  for (int j = 0;; ++j) {
    double k = k_lo + j * kStep;
    if (k >= k_hi) break;
    FixedPointOutcome cand = solve_fixed_point(r, p0_exponent, v, k, c_prev, a_floor);
    if (cand.feasible && cand.c < best.c) {
      best = cand;
      best_k = k;
    }
  }

  if (best.feasible) {
    // Golden-section refinement around the best grid point; the upper
    // interval end is open so stay strictly inside.
    double lo = std::max(k_lo, best_k - kStep);
    double hi = std::min(k_hi * (1.0 - 1e-12), best_k + kStep);
    auto value_at = [&](double k) {
      FixedPointOutcome o = solve_fixed_point(r, p0_exponent, v, k, c_prev, a_floor);
      return o.feasible ? o.c : std::numeric_limits<double>::infinity();
    };
    constexpr double kGolden = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = value_at(x1), f2 = value_at(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = value_at(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = value_at(x2);
      }
    }
    double k_ref = f1 < f2 ? x1 : x2;
    FixedPointOutcome refined = solve_fixed_point(r, p0_exponent, v, k_ref, c_prev, a_floor);
    if (refined.feasible && refined.c < best.c) {
      best = refined;
      best_k = k_ref;
    }
  }

  BurgessConstantResult res;
  res.inputs.r = r;
  res.inputs.p0_exponent = p0_exponent;
  res.inputs.variant = v;
  res.inputs.k = best_k;
  res.inputs.c_prime = best.c_prime;
  res.inputs.s = best.s;
  res.inputs.c_prev = c_prev;
  res.B = B_of_exp(r, res.inputs.log_p());
  res.A_min = best.A_min;
  res.c = best.c;
  res.feasible = best.feasible;
  res.boundary_constrained = best.boundary;
  res.infeasible_reason =
      best.feasible || !best.reason.empty() ? best.reason : "no feasible k on the grid";
  if (best.feasible) {
    ConstantInputs chk = res.inputs;
    res.worst_case_verified = verify_worst_case(chk, res.A_min, res.B, res.c);
  }
  auto ref = v == Variant::thm1 ? c1_reference(r, p0_exponent) : c2_reference(r, p0_exponent);
  if (ref) {
    res.reference = *ref;
    res.delta = res.c - *ref;
  }
  return res;
}

std::vector<BurgessConstantResult> optimize_rows(Variant v, int p0_exponent, int r_lo, int r_hi) {
  if (r_lo < 2 || r_hi < r_lo) throw precondition_error("optimize_rows: need 2 <= r_lo <= r_hi");
  std::vector<BurgessConstantResult> out;
  double c_prev = 0.0;
  for (int r = 2; r <= r_hi; ++r) {
    BurgessConstantResult row = optimize_constant(r, p0_exponent, v, c_prev);
    if (!row.feasible) throw std::runtime_error("optimize_rows: infeasible row in the chain");
    c_prev = row.c;
    if (r >= r_lo) out.push_back(std::move(row));
  }
  return out;
}

double floor_a_lower_bound_c(int r, int p0_exponent, Variant v) {
  double lp = p0_exponent * consts::ln10;
  double m = shift_coefficient(r);
  double p_pow = std::exp((0.25 - 0.25 / r) * lp);
  double c_r;
  if (v == Variant::thm1) {
    c_r = 29.0 * 30.0 * m / (p_pow * lp);
  } else {
    c_r = 31.0 * (64.0 / 3.0) * m / (p_pow * std::sqrt(lp));
  }
  return std::exp(std::log(c_r) / r);
}

std::vector<InequalityReport> verify_B_ge_15(int r_max) {
  if (r_max < 21) throw precondition_error("verify_B_ge_15: r_max must be >= 21");
  std::vector<InequalityReport> out;
  for (int r = 2; r <= 20; ++r) {
    InequalityReport rep;
    rep.name = "B_ge_15_at_1e7";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = 15.0;
    rep.rhs = B_of_exp(r, 7.0 * consts::ln10);
    rep.slack = 1e-9 * rep.rhs;
    out.push_back(rep);
  }
  for (int r = 21; r <= r_max; ++r) {
    InequalityReport rep;
    rep.name = "shift_coefficient_ge_15";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = 15.0;
    rep.rhs = shift_coefficient(r);
    rep.slack = 1e-9 * rep.rhs;
    out.push_back(rep);
  }
  for (int r = 2; r < r_max; ++r) {
    InequalityReport rep;
    rep.name = "shift_coefficient_increasing";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = shift_coefficient(r);
    rep.rhs = shift_coefficient(r + 1);
    rep.slack = 1e-12 * rep.rhs;
    out.push_back(rep);
  }
  return out;
}

std::vector<InequalityReport> corollary_274_check(double p0, int r_max) {
  if (p0 < 1e7) throw precondition_error("corollary_274_check: p0 must be >= 1e7");
  std::vector<InequalityReport> out;
  double lp = std::log(p0);
  const double k = 11.0 / 64.0;
  for (int r = 4; r <= r_max; ++r) {
    double rr = static_cast<double>(r);
    double m = shift_coefficient(r);
    double A = k * std::exp((0.25 - 0.25 / rr) * lp) * lp;
    double head = 15.0 * A / (14.0 * (A - 1.0));
    double main = main_coefficient(r);
    double p_pow = std::exp((0.5 - 0.5 / rr - 0.5 / (rr * (rr - 1.0))) * lp);
    double bracket = 1.0 / (m * p_pow) + 1.0 / (4.0 * k * lp) +
                     1.0 / (4.0 * rr * (rr - 1.0) * k * lp) +
                     std::log(1.85 * k * lp / m) / (k * lp * lp);
    double blowup = 16.0 * (A + 1.0) / (15.0 * A);
    double denom = 1.0 - (2.0 * rr * rr / ((2.0 * rr - 1.0) * (2.0 * rr - 1.0))) * k * blowup *
                             blowup * head;
    double c = head * main * std::pow(bracket, 0.5 / rr) / denom;
    InequalityReport rep;
    rep.name = "uniform_constant_274";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = denom > 0.0 ? c : std::numeric_limits<double>::infinity();
    rep.rhs = 2.74;
    rep.slack = 0.0;
    out.push_back(rep);
  }
  // The fixed-parameter envelope is only defined from r = 4; rows r = 2, 3
  // are covered by the optimized full-range constants at p0 = 10^7 instead,
  // flagged with their own name so the gap in the envelope's range is
  // visible in the report.
  for (const auto& row : optimize_rows(Variant::thm1, 7, 2, 3)) {
    InequalityReport rep;
    rep.name = "uniform_constant_274_via_c1_table";
    rep.params = "r=" + std::to_string(row.inputs.r);
    rep.lhs = row.feasible ? row.c : std::numeric_limits<double>::infinity();
    rep.rhs = 2.74;
    rep.slack = 0.0;
    out.push_back(rep);
  }
  // Auxiliary chain 2.74^r > 2r >= ((2r-3)!!(r-1))^{1/r}.
  for (int r = 1; r <= r_max; ++r) {
    InequalityReport rep;
    rep.name = "chain_274_pow_gt_2r";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = 2.0 * r;
    rep.rhs = std::exp(r * std::log(2.74));
    rep.slack = 0.0;
    out.push_back(rep);
    rep.name = "chain_2r_ge_shift_coefficient";
    rep.lhs = shift_coefficient(r);
    rep.rhs = 2.0 * r;
    rep.slack = 1e-12 * rep.rhs;
    out.push_back(rep);
  }
  return out;
}

std::vector<InequalityReport> corollary_range_extension_check(int r_max) {
  if (r_max < 3) throw precondition_error("corollary_range_extension_check: r_max must be >= 3");
  std::vector<InequalityReport> out;
  auto lhs_at = [](int r, double lp) {
    double rr = static_cast<double>(r);
    double expo = 0.375 - 0.125 / rr - 0.375 / (rr * (rr - 1.0));
    return std::exp((2.0 * rr / (rr - 1.0)) * std::log(2.6) + expo * lp) * std::sqrt(lp);
  };
  auto rhs_at = [](int r, double lp) { return 2.0 * std::exp((0.5 + 0.25 / r) * lp); };
  const double lp10 = 10.0 * consts::ln10;
  for (int r = 3; r <= std::min(21, r_max); ++r) {
    InequalityReport rep;
    rep.name = "range_extension_small_r";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = lhs_at(r, lp10);
    rep.rhs = rhs_at(r, lp10);
    rep.slack = 0.0;
    out.push_back(rep);
    // Monotone in p: the margin only widens for larger p.
    for (double lp : {12.0 * consts::ln10, 15.0 * consts::ln10, 20.0 * consts::ln10}) {
      InequalityReport mono;
      mono.name = "range_extension_monotone_p";
      mono.params = "r=" + std::to_string(r) + " log10p=" + fmt_g(lp / consts::ln10, 6);
      mono.lhs = lhs_at(r, lp) / rhs_at(r, lp);
      mono.rhs = lhs_at(r, lp10) / rhs_at(r, lp10);
      mono.slack = 1e-12;
      out.push_back(mono);
    }
  }
  // r >= 22: (2.6)^{44/21} p^{3/8} sqrt(log p) < 2 p^{1/2}, and the per-r
  // left side is dominated by the exponent-44/21 envelope.
  InequalityReport tail;
  tail.name = "range_extension_tail_envelope";
  tail.params = "r>=22";
  tail.lhs = std::exp((44.0 / 21.0) * std::log(2.6) + 0.375 * lp10) * std::sqrt(lp10);
  tail.rhs = 2.0 * std::exp(0.5 * lp10);
  tail.slack = 0.0;
  out.push_back(tail);
  for (int r = 22; r <= r_max; ++r) {
    InequalityReport rep;
    rep.name = "range_extension_tail_dominates";
    rep.params = "r=" + std::to_string(r);
    rep.lhs = lhs_at(r, lp10);
    rep.rhs = std::exp((44.0 / 21.0) * std::log(2.6) + 0.375 * lp10) * std::sqrt(lp10);
    rep.slack = 1e-12 * rep.rhs;
    out.push_back(rep);
  }
  return out;
}

namespace {

// r = 2..10 by row; columns are the tabulated p0 exponents.
constexpr double kC1Ref[9][3] = {
    {2.7381, 2.5173, 2.3549}, {2.0197, 1.7385, 1.3695}, {1.7308, 1.5151, 1.3104},
    {1.6107, 1.4572, 1.2987}, {1.5482, 1.4274, 1.2901}, {1.5052, 1.4042, 1.2813},
    {1.4703, 1.3846, 1.2729}, {1.4411, 1.3662, 1.2641}, {1.4160, 1.3495, 1.2562},
};
constexpr double kC2Ref[9][3] = {
    {3.6529, 3.5851, 3.5751}, {2.5888, 2.5144, 2.4945}, {2.1914, 2.1258, 2.1078},
    {1.9841, 1.9231, 1.9043}, {1.8508, 1.7959, 1.7757}, {1.7586, 1.7066, 1.6854},
    {1.6869, 1.6384, 1.6187}, {1.6283, 1.5857, 1.5654}, {1.5794, 1.5410, 1.5216},
};
struct FloorRef {
  double v;
  int dp;
};
constexpr FloorRef kC1Floor[9][3] = {
    {{2.68289, 5}, {1.45765, 5}, {0.24442, 5}},  {{1.88354, 5}, {1.13939, 5}, {0.251637, 6}},
    {{1.6153, 4}, {1.06881, 5}, {0.305418, 6}},  {{1.48379, 5}, {1.04807, 5}, {0.363232, 6}},
    {{1.40512, 5}, {1.04167, 5}, {0.417191, 6}}, {{1.35216, 5}, {1.04007, 5}, {0.465518, 6}},
    {{1.31369, 5}, {1.04016, 5}, {0.508197, 6}}, {{1.28422, 5}, {1.04077, 5}, {0.545749, 6}},
    {{1.26077, 5}, {1.04147, 5}, {0.578819, 6}},
};
constexpr FloorRef kC2Floor[9][3] = {
    {{2.78392, 5}, {1.22500, 5}, {0.55514, 5}}, {{1.75393, 5}, {0.86474, 5}, {0.43480, 5}},
    {{1.47708, 5}, {0.81850, 5}, {0.46029, 5}}, {{1.35767, 5}, {0.82260, 5}, {0.50431, 5}},
    {{1.29240, 5}, {0.83775, 5}, {0.54839, 5}}, {{1.25127, 5}, {0.85450, 5}, {0.58848, 5}},
    {{1.22279, 5}, {0.87022, 5}, {0.62388, 5}}, {{1.20171, 5}, {0.88422, 5}, {0.65489, 5}},
    {{1.18536, 5}, {0.89649, 5}, {0.68202, 5}},
};
constexpr double kMcgownC[14] = {10.0366, 4.9539, 3.6493, 3.0356, 2.6765, 2.4400, 2.2721,
                                 2.1467,  2.0492, 1.9712, 1.9073, 1.8540, 1.8088, 1.7700};

int p0_column(Variant v, int p0_exponent) {
  if (v == Variant::thm1) {
    if (p0_exponent == 7) return 0;
    if (p0_exponent == 10) return 1;
    if (p0_exponent == 20) return 2;
  } else {
    if (p0_exponent == 10) return 0;
    if (p0_exponent == 15) return 1;
    if (p0_exponent == 20) return 2;
  }
  return -1;
}

}  // namespace

std::optional<double> c1_reference(int r, int p0_exponent) {
  int col = p0_column(Variant::thm1, p0_exponent);
  if (col < 0 || r < 2 || r > 10) return std::nullopt;
  return kC1Ref[r - 2][col];
}

std::optional<double> c2_reference(int r, int p0_exponent) {
  int col = p0_column(Variant::thm2, p0_exponent);
  if (col < 0 || r < 2 || r > 10) return std::nullopt;
  return kC2Ref[r - 2][col];
}

std::optional<FloorBoundReference> floor_bound_reference(int r, int p0_exponent, Variant v) {
  int col = p0_column(v, p0_exponent);
  if (col < 0 || r < 2 || r > 10) return std::nullopt;
  const FloorRef& fr = v == Variant::thm1 ? kC1Floor[r - 2][col] : kC2Floor[r - 2][col];
  return FloorBoundReference{fr.v, fr.dp};
}

std::optional<double> mcgown_reference(int r) {
  if (r < 2 || r > 15) return std::nullopt;
  return kMcgownC[r - 2];
}

namespace {

std::string opt_field(const std::optional<double>& v, int digits) {
  return v ? fmt_g(*v, digits) : "";
}

}  // namespace

void write_constants_csv(std::ostream& os, const std::vector<BurgessConstantResult>& rows) {
  os << "variant,r,p0_exponent,k,c_prime,s,A_min,B,c,reference,delta\n";
  for (const auto& row : rows) {
    os << variant_name(row.inputs.variant) << ',' << row.inputs.r << ',' << row.inputs.p0_exponent
       << ',' << fmt_g(row.inputs.k, 17) << ',' << fmt_g(row.inputs.c_prime, 17) << ','
       << fmt_g(row.inputs.s, 17) << ',' << fmt_g(row.A_min, 17) << ',' << fmt_g(row.B, 17) << ','
       << fmt_g(row.c, 17) << ',' << opt_field(row.reference, 17) << ','
       << opt_field(row.delta, 17) << '\n';
  }
}

void write_constants_json(std::ostream& os, const std::vector<BurgessConstantResult>& rows) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    os << "  {\"variant\": \"" << variant_name(row.inputs.variant) << "\", \"r\": " << row.inputs.r
       << ", \"p0_exponent\": " << row.inputs.p0_exponent << ", \"k\": " << fmt_g(row.inputs.k, 17)
       << ", \"c_prime\": " << fmt_g(row.inputs.c_prime, 17) << ", \"s\": "
       << fmt_g(row.inputs.s, 17) << ", \"A_min\": " << fmt_g(row.A_min, 17) << ", \"B\": "
       << fmt_g(row.B, 17) << ", \"c\": " << fmt_g(row.c, 17);
    if (row.reference) os << ", \"reference\": " << fmt_g(*row.reference, 17);
    if (row.delta) os << ", \"delta\": " << fmt_g(*row.delta, 17);
    os << ", \"feasible\": " << (row.feasible ? "true" : "false") << "}"
       << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

void write_constants_text(std::ostream& os, const std::vector<BurgessConstantResult>& rows) {
  os << "variant  r  p0     k          c_prime   s         A_min      B          c         "
        "reference delta      mcgown_C\n";
  for (const auto& row : rows) {
    os << variant_name(row.inputs.variant) << "     " << row.inputs.r << "  10^"
       << row.inputs.p0_exponent << "  " << fmt_g(row.inputs.k, 6) << "  "
       << fmt_g(row.inputs.c_prime, 6) << "  " << fmt_g(row.inputs.s, 6) << "  "
       << fmt_g(row.A_min, 6) << "  " << fmt_g(row.B, 6) << "  " << fmt_g(row.c, 6) << "  "
       << opt_field(row.reference, 6) << "  " << opt_field(row.delta, 6);
    // comparison only: the older restricted-range constants share the
    // (log p)^{1/2r} shape of thm2
    if (row.inputs.variant == Variant::thm2) os << "  " << opt_field(mcgown_reference(row.inputs.r), 6);
    os << '\n';
  }
}

}  // namespace burgess
