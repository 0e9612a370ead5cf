#include "burgess/weil.hpp"

#include <algorithm>
#include <cmath>

#include "burgess/modmath.hpp"
#include "burgess/parallel.hpp"
#include "burgess/sieve.hpp"

namespace burgess {

double double_factorial_odd(int r) {
  if (r <= 0) return 1.0;
  if (r <= 15) {
    u64 v = 1;
    for (int j = 1; j <= r; ++j) v *= static_cast<u64>(2 * j - 1);
    return static_cast<double>(v);
  }
  return std::exp(log_double_factorial_odd(r));
}

double log_double_factorial_odd(int r) {
  double s = 0.0;
  for (int j = 1; j <= r; ++j) s += std::log(static_cast<double>(2 * j - 1));
  return s;
}

double weil_bound(u64 p, double B, int r) {
  if (r < 1 || B <= 0.0) throw precondition_error("weil_bound: need r >= 1 and B > 0");
  if (static_cast<double>(r) > 9.0 * B)
    throw precondition_error("weil_bound: hypothesis r <= 9B violated");
  double lp = std::log(static_cast<double>(p));
  double lb = std::log(B);
  double main_term = std::exp(log_double_factorial_odd(r) + r * lb + lp);
  double tail_term = std::exp(std::log(static_cast<double>(2 * r - 1)) + 2.0 * r * lb + 0.5 * lp);
  return main_term + tail_term;
}

WeilInnerSums weil_inner_sums(const DirichletCharacter& chi, int B) {
  if (chi.is_principal()) throw precondition_error("weil moment: principal character rejected");
  if (B < 1 || static_cast<u64>(B) >= chi.modulus())
    throw precondition_error("weil moment: need 1 <= B < p");
  WeilInnerSums s;
  s.p = chi.modulus();
  s.B = 0;
  s.exact = chi.order() <= 2;
  if (s.exact) {
    s.exact_inner.assign(s.p, 0);
  } else {
    s.acc.assign(2 * s.p, 0.0);
  }
  for (int b = 1; b <= B; ++b) weil_extend_inner_sums(chi, s);
  return s;
}

void weil_extend_inner_sums(const DirichletCharacter& chi, WeilInnerSums& s) {
  u64 p = s.p;
  int b = s.B + 1;
  if (s.exact) {
    for (u64 x = 0; x < p; ++x) {
      u64 n = x + static_cast<u64>(b);
      if (n >= p) n -= p;  // b < p, so one subtraction reduces
      s.exact_inner[x] += *chi.eval(static_cast<i64>(n)).exact;
    }
  } else {
    for (u64 x = 0; x < p; ++x) {
      u64 n = x + static_cast<u64>(b);
      if (n >= p) n -= p;
      std::complex<double> v = chi.eval(static_cast<i64>(n)).value;
      s.acc[2 * x] += v.real();
      s.acc[2 * x + 1] += v.imag();
    }
  }
  s.B = b;
}

double weil_moment(const WeilInnerSums& s, int r) {
  if (r < 1) throw precondition_error("weil_moment: r must be >= 1");
  u64 p = s.p;
  if (s.exact) {
    // |inner|^{2r} stays integral; fall back to long double only if the
    // worst case B^{2r} * p could overflow.
    double worst = 2.0 * r * std::log2(static_cast<double>(std::max(s.B, 2))) +
                   std::log2(static_cast<double>(p));
    if (worst < 126.0) {
      u128 total = 0;
      for (u64 x = 0; x < p; ++x) {
        i64 v = s.exact_inner[x];
        u128 sq = static_cast<u128>(static_cast<i128>(v) * v);
        u128 term = 1;
        for (int j = 0; j < r; ++j) term *= sq;
        total += term;
      }
      return static_cast<double>(total);
    }
    long double total = 0.0L;
    for (u64 x = 0; x < p; ++x) {
      long double sq = static_cast<long double>(s.exact_inner[x]) * s.exact_inner[x];
      long double term = 1.0L;
      for (int j = 0; j < r; ++j) term *= sq;
      total += term;
    }
    return static_cast<double>(total);
  }
  long double total = 0.0L;
  for (u64 x = 0; x < p; ++x) {
    double re = s.acc[2 * x], im = s.acc[2 * x + 1];
    long double sq = static_cast<long double>(re) * re + static_cast<long double>(im) * im;
    long double term = 1.0L;
    for (int j = 0; j < r; ++j) term *= sq;
    total += term;
  }
  return static_cast<double>(total);
}

double weil_moment(const DirichletCharacter& chi, int B, int r) {
  return weil_moment(weil_inner_sums(chi, B), r);
}

std::vector<MomentReport> verify_weil_all(u64 p, int B, int r, u64 cap) {
  if (!is_prime(p) || p < 3) throw precondition_error("verify_weil_all: p must be an odd prime");
  if (p > cap)
    throw precondition_error(
        "verify_weil_all: p exceeds the all-characters cap; use sampled characters instead");
  double bound = weil_bound(p, static_cast<double>(B), r);  // validates r <= 9B
  auto group = CharacterGroup::build(p);
  std::vector<MomentReport> reports(p - 2);
  for (u64 idx = 1; idx + 1 < p; ++idx) {
    DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
    WeilInnerSums sums = weil_inner_sums(chi, B);
    MomentReport& rep = reports[idx - 1];
    rep.p = p;
    rep.group_index = idx;
    rep.B = B;
    rep.r = r;
    rep.W = weil_moment(sums, r);
    rep.bound = bound;
    rep.exact = sums.exact;
  }
  return reports;
}

WeilRangeSummary verify_weil_range(u64 p_max, int b_max, const std::vector<int>& rs, int jobs) {
  WeilRangeSummary total;
  for (u64 p : primes_up_to(p_max)) {
    if (p < 3) continue;
    auto group = CharacterGroup::build(p);
    u64 n_chars = p - 2;
    std::vector<WeilRangeSummary> per_char(n_chars);
    parallel_tasks(n_chars, jobs, [&](u64 t) {
      u64 idx = t + 1;
      WeilRangeSummary& acc = per_char[t];
      DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
      WeilInnerSums sums = weil_inner_sums(chi, 1);
      for (int B = 1; B <= b_max; ++B) {
        if (B > 1) weil_extend_inner_sums(chi, sums);
        for (int r : rs) {
          if (r > 9 * B) continue;
          MomentReport rep;
          rep.p = p;
          rep.group_index = idx;
          rep.B = B;
          rep.r = r;
          rep.W = weil_moment(sums, r);
          rep.bound = weil_bound(p, static_cast<double>(B), r);
          rep.exact = sums.exact;
          ++acc.checks;
          if (!rep.holds()) ++acc.failures;
          double rel = rep.margin() / rep.bound;
          if (rel < acc.min_margin_rel) {
            acc.min_margin_rel = rel;
            acc.worst = rep;
          }
        }
      }
    });
    for (const auto& acc : per_char) {  // merge in character order
      total.checks += acc.checks;
      total.failures += acc.failures;
      if (acc.min_margin_rel < total.min_margin_rel) {
        total.min_margin_rel = acc.min_margin_rel;
        total.worst = acc.worst;
      }
    }
  }
  return total;
}

}  // namespace burgess
