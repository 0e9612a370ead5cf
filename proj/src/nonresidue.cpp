#include "burgess/nonresidue.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "burgess/modmath.hpp"
#include "burgess/sieve.hpp"

namespace burgess {

bool is_kth_residue(u64 n, u64 p, u64 k) {
  if (!is_prime(p)) throw precondition_error("is_kth_residue: p must be prime");
  if (k == 0 || (p - 1) % k != 0) throw precondition_error("is_kth_residue: k must divide p-1");
  if (n == 0 || n >= p) throw precondition_error("is_kth_residue: need 1 <= n < p");
  return pow_mod(n, (p - 1) / k, p) == 1;
}

u64 least_nonresidue(u64 p, u64 k) {
  if (!is_prime(p)) throw precondition_error("least_nonresidue: p must be prime");
  if (k <= 1 || (p - 1) % k != 0)
    throw precondition_error("least_nonresidue: k must divide p-1 and exceed 1");
  u64 e = (p - 1) / k;
  for (u64 n = 2; n < p; ++n) {
    if (pow_mod(n, e, p) != 1) return n;
  }
  throw std::logic_error("least_nonresidue: no non-residue found");
}

double norton_bound(u64 p, u64 k) {
  double pd = static_cast<double>(p);
  double c = (k == 2 && p % 4 == 3) ? 1.1 : 0.9;
  return c * std::pow(pd, 0.25) * std::log(pd);
}

double grh_bound(u64 p) {
  double lp = std::log(static_cast<double>(p));
  return 2.0 * lp * lp;
}

ScanSummary scan_nonresidues(u64 p_min, u64 p_max, std::optional<u64> k_filter,
                             const std::function<void(const NonResidueRecord&)>& sink) {
  if (p_max > 1000000000ULL) throw precondition_error("scan_nonresidues: p_max capped at 1e9");
  ScanSummary sum;
  for_primes_in(std::max<u64>(p_min, 3), p_max, [&](u64 p) {
    ++sum.primes;
    std::vector<u64> ks;
    if (k_filter) {
      if (*k_filter > 1 && (p - 1) % *k_filter == 0) ks.push_back(*k_filter);
    } else {
      for (u64 d : divisors(p - 1))
        if (d > 1) ks.push_back(d);
    }
    for (u64 k : ks) {
      NonResidueRecord rec;
      rec.p = p;
      rec.k = k;
      rec.g = least_nonresidue(p, k);
      rec.norton = norton_bound(p, k);
      rec.grh = grh_bound(p);
      rec.ok = static_cast<double>(rec.g) <= rec.norton;
      ++sum.records;
      if (!rec.ok) ++sum.violations;
      if (!is_prime(rec.g)) ++sum.nonprime_g;
      if (rec.g > sum.max_g) {
        sum.max_g = rec.g;
        sum.max_record = rec;
      }
      if (sink) sink(rec);
    }
  });
  return sum;
}

void write_scan_csv_header(std::ostream& os) { os << "p,k,g,norton_bound,grh_bound,ok\n"; }

void write_scan_csv_row(std::ostream& os, const NonResidueRecord& rec) {
  os << rec.p << ',' << rec.k << ',' << rec.g << ',' << fmt_g(rec.norton, 17) << ','
     << fmt_g(rec.grh, 17) << ',' << (rec.ok ? "true" : "false") << '\n';
}

namespace {

void fill_prime_recip(double x, double mertens_b, double prime_sum, double pi_x,
                      PrimeRecipReports& out) {
  double lx = std::log(x);
  double llx = std::log(lx);
  std::string params = "x=" + fmt_g(x, 17);

  out.lower.name = "prime_recip_lower";
  out.lower.params = params;
  out.lower.lhs = llx + mertens_b - 0.5 / (lx * lx);
  out.lower.rhs = prime_sum;
  out.lower.slack = 1e-12 * std::max(1.0, std::fabs(prime_sum));

  out.upper.name = "prime_recip_upper";
  out.upper.params = params;
  out.upper.lhs = prime_sum;
  out.upper.rhs = llx + mertens_b + 0.5 / (lx * lx);
  out.upper.slack = 1e-12 * std::max(1.0, std::fabs(prime_sum));
  out.upper_asserted = x >= 286.0;

  out.pi_upper.name = "pi_upper";
  out.pi_upper.params = params;
  out.pi_upper.lhs = pi_x;
  out.pi_upper.rhs = x / lx * (1.0 + 1.5 / lx);
  out.pi_upper.slack = 1e-12 * std::max(1.0, pi_x);
}

}  // namespace

PrimeRecipReports prime_recip_bounds(double x, double mertens_b) {
  if (x <= 1.0) throw precondition_error("prime_recip_bounds: x must exceed 1");
  double prime_sum = 0.0, comp = 0.0;
  u64 pi_x = 0;
  for (u64 p : primes_up_to(static_cast<u64>(x))) {
    ++pi_x;
    double y = 1.0 / static_cast<double>(p) - comp;
    double t = prime_sum + y;
    comp = (t - prime_sum) - y;
    prime_sum = t;
  }
  PrimeRecipReports out;
  fill_prime_recip(x, mertens_b, prime_sum, static_cast<double>(pi_x), out);
  return out;
}

InequalityReport prime_recip_interval(double y, double x) {
  if (!(x > y && y > 1.0 && x >= 286.0))
    throw precondition_error("prime_recip_interval: need x > y > 1 and x >= 286");
  double s = 0.0, comp = 0.0;
  for (u64 p : primes_up_to(static_cast<u64>(x))) {
    if (static_cast<double>(p) <= y) continue;
    double v = 1.0 / static_cast<double>(p) - comp;
    double t = s + v;
    comp = (t - s) - v;
    s = t;
  }
  double lx = std::log(x), ly = std::log(y);
  InequalityReport r;
  r.name = "prime_recip_interval";
  r.params = "y=" + fmt_g(y, 17) + " x=" + fmt_g(x, 17);
  r.lhs = s;
  r.rhs = std::log(lx) - std::log(ly) + 0.5 / (lx * lx) + 0.5 / (ly * ly);
  r.slack = 1e-12 * std::max(1.0, std::fabs(s));
  return r;
}

SweepSummary prime_recip_sweep(u64 x_max, u64 seed, double mertens_b) {
  SweepSummary sum;
  SplitMix64 rng(seed);
  std::vector<u64> primes = primes_up_to(x_max);
  std::size_t next_p = 0;
  double prime_sum = 0.0, comp = 0.0;
  u64 pi_x = 0;
  for (u64 x = 2; x <= x_max; ++x) {
    if (next_p < primes.size() && primes[next_p] == x) {
      ++pi_x;
      double y = 1.0 / static_cast<double>(x) - comp;
      double t = prime_sum + y;
      comp = (t - prime_sum) - y;
      prime_sum = t;
      ++next_p;
    }
    PrimeRecipReports r;
    fill_prime_recip(static_cast<double>(x), mertens_b, prime_sum, static_cast<double>(pi_x), r);
    sum.absorb(r.lower);
    sum.absorb(r.pi_upper);
    if (r.upper_asserted) sum.absorb(r.upper);
  }
  // Sampled reals in (1, 286): lower and pi bounds only.
  for (int i = 0; i < 64; ++i) {
    double x = 1.0 + 285.0 * (rng.unit() * 0.999 + 0.0005);
    double s = 0.0;
    u64 cnt = 0;
    for (u64 p : primes) {
      if (static_cast<double>(p) > x) break;
      s += 1.0 / static_cast<double>(p);
      ++cnt;
    }
    PrimeRecipReports r;
    fill_prime_recip(x, mertens_b, s, static_cast<double>(cnt), r);
    sum.absorb(r.lower);
    sum.absorb(r.pi_upper);
  }
  return sum;
}

double vinogradov_lower_bound(double x, double delta) {
  if (x < 286.0 || delta <= 0.0)
    throw precondition_error("vinogradov_lower_bound: need x >= 286 and delta > 0");
  double lx = std::log(x);
  double ly = (consts::inv_sqrt_e + delta) * lx;  // y = x^{1/sqrt(e)+delta}
  return x * (2.0 * std::log1p(delta * consts::sqrt_e) - 1.0 / (lx * lx) - 1.0 / (ly * ly) -
              1.0 / x);
}

InequalityReport vinogradov_chain_check(const DirichletCharacter& chi, double y, double x) {
  u64 p = chi.modulus();
  if (!(x < static_cast<double>(p))) throw precondition_error("vinogradov_chain_check: need x < p");
  if (y < 1.0 || y > x) throw precondition_error("vinogradov_chain_check: need 1 <= y <= x");
  u64 yi = static_cast<u64>(y);
  for (u64 n = 1; n <= yi; ++n) {
    auto e = chi.exponent_of(static_cast<i64>(n));
    if (!e || *e != 0)
      throw hypothesis_error("vinogradov_chain_check: chi(n) != 1 for some n <= y");
  }
  u64 xi = static_cast<u64>(x);
  CharSumValue s = chi.sum(0, xi);
  double abs_s = std::abs(s.value);
  double tail = 0.0;  // primes q >= floor(y)+1 are exactly the primes > y
  for_primes_in(yi + 1, xi, [&](u64 q) { tail += static_cast<double>(xi / q); });
  InequalityReport r;
  r.name = "vinogradov_chain";
  r.params = "p=" + std::to_string(p) + " y=" + fmt_g(y, 17) + " x=" + fmt_g(x, 17);
  r.lhs = static_cast<double>(xi) - 2.0 * tail;
  r.rhs = abs_s;
  r.slack = chi.order() <= 2 ? 0.0 : 1e-9 * static_cast<double>(xi);
  return r;
}

SweepSummary vinogradov_chain_sweep(u64 p_max) {
  SweepSummary sum;
  for_primes_in(3, p_max, [&](u64 p) {
    u64 g = least_nonresidue(p, 2);
    if (g < 7) return;
    DirichletCharacter chi = DirichletCharacter::quadratic(p);
    u64 y = g - 1;
    u64 x_hi = std::min(p - 1, 3 * y);
    for (u64 x = y + 1; x <= x_hi; ++x)
      sum.absorb(vinogradov_chain_check(chi, static_cast<double>(y), static_cast<double>(x)));
  });
  return sum;
}

double delta_of(const Rational& alpha, int r) {
  if (r < 1 || alpha.num <= 0 || alpha.den <= 0)
    throw precondition_error("delta_of: need r >= 1 and alpha > 0");
  double a = alpha.value();
  double delta = a / (0.25 + 0.5 / r) - consts::inv_sqrt_e;
  if (delta <= 0.0)
    throw precondition_error("delta_of: no positive delta; alpha/(1/4+1/(2r)) must exceed 1/sqrt(e)");
  return delta;
}

namespace {

// Left side c p^{loglog p/(r log p) - 1/4r^2}; right side the lower-bound
// coefficient from the Vinogradov trick. The claim at p holds when
// rhs > lhs.
struct ThresholdSides {
  double lhs;
  double rhs;
};

ThresholdSides threshold_sides(double lp, int r, double constant, double delta, double alpha) {
  ThresholdSides s;
  double rr = static_cast<double>(r);
  s.lhs = constant * std::exp(std::log(lp) / rr - lp / (4.0 * rr * rr));
  double lx = (0.25 + 0.5 / rr) * lp;
  double ly = alpha * lp;
  double inv_x = lx > 700.0 ? 0.0 : std::exp(-lx);
  s.rhs = 2.0 * std::log1p(delta * consts::sqrt_e) - 1.0 / (lx * lx) - 1.0 / (ly * ly) - inv_x;
  return s;
}

}  // namespace

ThresholdResult threshold_solver(const Rational& alpha, int r, double constant, i64 e_max) {
  double delta = delta_of(alpha, r);
  double a = alpha.value();
  ThresholdResult out;
  out.alpha = alpha;
  out.r = r;
  out.constant = constant;
  out.delta = delta;
  for (i64 e = 2; e <= e_max; ++e) {
    ThresholdSides s = threshold_sides(e * consts::ln10, r, constant, delta, a);
    if (s.rhs > s.lhs) {
      out.exponent = e;
      out.lhs_at_e = s.lhs;
      out.rhs_at_e = s.rhs;
      ThresholdSides prev = threshold_sides((e - 1) * consts::ln10, r, constant, delta, a);
      out.lhs_prev = prev.lhs;
      out.rhs_prev = prev.rhs;
      // Monotonicity on the bracket: the left side keeps shrinking, so the
      // claim stays true beyond E.
      double last = s.lhs;
      for (i64 e2 = e + 1; e2 <= e + 16; ++e2) {
        ThresholdSides nxt = threshold_sides(e2 * consts::ln10, r, constant, delta, a);
        if (nxt.lhs >= last || nxt.rhs <= nxt.lhs)
          throw std::runtime_error("threshold_solver: claim not monotone past the threshold");
        last = nxt.lhs;
      }
      return out;
    }
  }
  throw std::runtime_error("threshold_solver: no threshold found up to e_max");
}

void write_threshold_json(std::ostream& os, const ThresholdResult& t) {
  os << "{\n"
     << "  \"alpha\": \"" << t.alpha.str() << "\",\n"
     << "  \"r\": " << t.r << ",\n"
     << "  \"constant\": " << fmt_g(t.constant, 17) << ",\n"
     << "  \"delta\": " << fmt_g(t.delta, 17) << ",\n"
     << "  \"exponent\": " << t.exponent << ",\n"
     << "  \"lhs_at_e\": " << fmt_g(t.lhs_at_e, 17) << ",\n"
     << "  \"rhs_at_e\": " << fmt_g(t.rhs_at_e, 17) << ",\n"
     << "  \"lhs_prev\": " << fmt_g(t.lhs_prev, 17) << ",\n"
     << "  \"rhs_prev\": " << fmt_g(t.rhs_prev, 17) << "\n"
     << "}\n";
}

ThresholdSweep threshold_sweep(const Rational& alpha, int r_lo, int r_hi, double constant) {
  ThresholdSweep sweep;
  i64 best = -1;
  for (int r = r_lo; r <= r_hi; ++r) {
    ThresholdSweepRow row;
    row.r = r;
    try {
      row.delta = delta_of(alpha, r);
      row.has_delta = true;
      row.exponent = threshold_solver(alpha, r, constant).exponent;
    } catch (const precondition_error&) {
      row.has_delta = false;
    }
    sweep.rows.push_back(row);
    if (row.has_delta && (best < 0 || row.exponent < best)) {
      best = row.exponent;
      sweep.best_r = r;
      sweep.best_exponent = row.exponent;
    }
  }
  return sweep;
}

}  // namespace burgess
