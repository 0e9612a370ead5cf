#include "burgess/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "burgess/modmath.hpp"

namespace burgess {

namespace {

constexpr double k6pi2 = 6.0 / (consts::pi * consts::pi);
constexpr double k2pi2 = 2.0 / (consts::pi * consts::pi);

double slack_for(double lhs, double rhs) {
  return 1e-9 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

struct Kahan {
  double s = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

InequalityReport phi_ratio_sum(const SieveTables& t, double x) {
  if (x < 1.0) throw precondition_error("phi_ratio_sum: x must be >= 1");
  u64 n_max = static_cast<u64>(x);
  if (n_max > t.limit) throw precondition_error("phi_ratio_sum: x beyond sieve limit");
  Kahan s;
  for (u64 n = 1; n <= n_max; ++n) s.add(static_cast<double>(t.phi[n]) / static_cast<double>(n));
  InequalityReport r;
  r.name = "phi_ratio_sum";
  r.params = "x=" + fmt_g(x, 17);
  r.lhs = s.s;
  r.rhs = k6pi2 * x + std::log(x) + 1.0;
  r.slack = slack_for(r.lhs, r.rhs);
  return r;
}

InequalityReport phi_n_sum(const SieveTables& t, double x) {
  if (x < 1.0) throw precondition_error("phi_n_sum: x must be >= 1");
  u64 n_max = static_cast<u64>(x);
  if (n_max > t.limit) throw precondition_error("phi_n_sum: x beyond sieve limit");
  u128 s = 0;
  for (u64 n = 1; n <= n_max; ++n) s += static_cast<u128>(n) * t.phi[n];
  InequalityReport r;
  r.name = "phi_n_sum";
  r.params = "x=" + fmt_g(x, 17);
  r.lhs = static_cast<double>(s);
  r.rhs = k2pi2 * x * x * x + 0.5 * x * x * std::log(x) + x * x;
  r.slack = slack_for(r.lhs, r.rhs);
  return r;
}

InequalityReport log_sum(double x) {
  if (x < 1.0) throw precondition_error("log_sum: x must be >= 1");
  u64 d_max = static_cast<u64>(x);
  Kahan s;
  for (u64 d = 1; d <= d_max; ++d) s.add(std::log(x / static_cast<double>(d)));
  InequalityReport r;
  r.name = "log_sum";
  r.params = "x=" + fmt_g(x, 17);
  r.lhs = s.s;
  r.rhs = x - 1.0;
  r.slack = slack_for(r.lhs, r.rhs);
  return r;
}

InequalityReport mertens_tail(const SieveTables& t, double x) {
  if (x < 2.0) throw precondition_error("mertens_tail: x must be >= 2");
  u64 d_max = static_cast<u64>(x);
  if (d_max > t.limit) throw precondition_error("mertens_tail: x beyond sieve limit");
  Kahan s;
  for (u64 d = 1; d <= d_max; ++d) {
    if (t.mu[d] != 0) s.add(static_cast<double>(t.mu[d]) / (static_cast<double>(d) * static_cast<double>(d)));
  }
  InequalityReport r;
  r.name = "mertens_tail";
  r.params = "x=" + fmt_g(x, 17);
  r.lhs = std::fabs(k6pi2 - s.s);
  r.rhs = 1.0 / (3.0 * x) + 8.0 / (3.0 * x * x);
  r.slack = slack_for(r.lhs, r.rhs);
  return r;
}

SweepSummary phi_ratio_strong_small_range() {
  SweepSummary sum;
  Kahan s;
  s.add(1.0);  // n = 1
  for (u64 x = 2; x <= 41; ++x) {
    u32 phi = 1;
    for (u64 n = 1; n < x; ++n)  // trial-division phi, independent of the sieve
      if (std::gcd(n, x) == 1 && n > 1) ++phi;
    s.add(static_cast<double>(phi) / static_cast<double>(x));
    InequalityReport r;
    r.name = "phi_ratio_sum_strong";
    r.params = "x=" + std::to_string(x);
    r.lhs = s.s;
    r.rhs = k6pi2 * (static_cast<double>(x) - 1.0) + std::log(static_cast<double>(x) - 1.0) + 1.0;
    r.slack = slack_for(r.lhs, r.rhs);
    sum.absorb(r);
  }
  return sum;
}

InequalityReport pair_count_check(u64 a1, u64 a2, i64 M, u64 N, u64 p, i64 kk) {
  if (a1 == a2 || a1 == 0 || a2 == 0) throw precondition_error("pair_count_check: need 1 <= a1 != a2");
  if (a1 > p || a2 > p) throw precondition_error("pair_count_check: a1, a2 must be <= p");
  if (N >= p || !is_prime(p)) throw precondition_error("pair_count_check: need prime p > N");
  u64 count = 0;
  for (i64 n1 = M + 1; n1 <= M + static_cast<i64>(N); ++n1) {
    i128 num = static_cast<i128>(kk) * static_cast<i64>(p) + static_cast<i128>(a2) * n1;
    if (num % static_cast<i64>(a1) != 0) continue;
    i128 n2 = num / static_cast<i64>(a1);
    if (n2 > M && n2 <= M + static_cast<i64>(N)) ++count;
  }
  InequalityReport r;
  r.name = "pair_count";
  r.params = "a1=" + std::to_string(a1) + " a2=" + std::to_string(a2) + " M=" + std::to_string(M) +
             " N=" + std::to_string(N) + " p=" + std::to_string(p) + " k=" + std::to_string(kk);
  r.lhs = static_cast<double>(count);
  r.rhs = static_cast<double>(N) * static_cast<double>(std::gcd(a1, a2)) /
              static_cast<double>(std::max(a1, a2)) +
          1.0;
  r.slack = 0.0;  // integer count vs rational bound, no float ambiguity at this scale
  return r;
}

VCountReport v_counts(u64 p, u64 A, i64 M, u64 N) {
  if (!is_prime(p)) throw precondition_error("v_counts: p must be prime");
  if (N >= p) throw precondition_error("v_counts: N must be < p");
  if (A == 0 || A >= p) throw precondition_error("v_counts: A must satisfy 1 <= A < p");
  VCountReport rep;
  rep.p = p;
  rep.A = A;
  rep.M = M;
  rep.N = N;
  std::vector<u32> counts(p, 0);
  for (u64 a = 1; a <= A; ++a) {
    u64 inv_a = mod_inverse(a, p);
    for (u64 off = 1; off <= N; ++off) {
      i64 n = M + static_cast<i64>(off);
      i64 nr = n % static_cast<i64>(p);
      if (nr < 0) nr += static_cast<i64>(p);
      u64 x = mul_mod(static_cast<u64>(nr), inv_a, p);
      ++counts[x];
    }
  }
  for (u64 x = 0; x < p; ++x) {
    if (counts[x] == 0) continue;
    rep.histogram.emplace(x, counts[x]);
    rep.v1 += counts[x];
    rep.v2 += static_cast<u64>(counts[x]) * counts[x];
  }
  double An = static_cast<double>(A), Nn = static_cast<double>(N), pn = static_cast<double>(p);
  rep.a_ge_28 = A >= 28;
  rep.n_gt_12a = N > 12 * A;
  rep.n_lt_p = N < p;
  rep.a_ge_30 = A >= 30;
  rep.n_gt_7a = N > 7 * A;
  rep.two_an_lt_p = 2 * A * N < p;
  rep.general_applicable = rep.a_ge_28 && rep.n_gt_12a && rep.n_lt_p;
  rep.tight_applicable = rep.a_ge_30 && rep.n_gt_7a && rep.two_an_lt_p;
  if (rep.general_applicable)
    rep.v2_bound_general = 2.0 * An * Nn * (An * Nn / pn + std::log(1.85 * An));
  if (rep.tight_applicable) rep.v2_bound_tight = 2.0 * An * Nn * std::log(1.85 * An);
  rep.cauchy_schwarz_floor = static_cast<double>(rep.v1) * static_cast<double>(rep.v1) / pn;
  return rep;
}

SSumsReport s_sums_check(u64 A) {
  if (A < 2) throw precondition_error("s_sums_check: A must be >= 2");
  SSumsReport out;
  out.A = A;
  u64 s1_times4 = 0;  // 4*S1 accumulated exactly (each column is a multiple of 1/2)
  u64 s2_exact = 0;   // S2 is integral: gcd(a1,a2) divides a1+a2
  Kahan s3;
  for (u64 a2 = 2; a2 <= A; ++a2) {
    u64 col = 0;  // sum over a1 < a2 of 2*(a1+a2), divisible by a2
    for (u64 a1 = 1; a1 < a2; ++a1) {
      col += 2 * (a1 + a2);
      u64 g = std::gcd(a1, a2);
      s2_exact += (a1 + a2) / g;
      s3.add(static_cast<double>(g) / static_cast<double>(a2));
    }
    s1_times4 += 2 * (col / a2);
  }
  double Ad = static_cast<double>(A);
  double logA = std::log(Ad);

  u64 closed_times4 = 3 * A * (A - 1);
  out.s1_identity.name = "s1_identity";
  out.s1_identity.params = "A=" + std::to_string(A);
  out.s1_identity.lhs = static_cast<double>(s1_times4 > closed_times4 ? s1_times4 - closed_times4
                                                                      : closed_times4 - s1_times4);
  out.s1_identity.rhs = 0.0;
  out.s1_identity.slack = 0.0;

  out.s2.name = "s2_bound";
  out.s2.params = "A=" + std::to_string(A);
  out.s2.lhs = static_cast<double>(s2_exact);
  out.s2.rhs = 3.0 * consts::zeta3 / (consts::pi * consts::pi) * Ad * Ad * Ad +
               0.75 * consts::zeta2 * Ad * Ad * logA + 2.0 * Ad * Ad;
  out.s2.slack = slack_for(out.s2.lhs, out.s2.rhs);
  out.s2_asserted = A >= 11;

  out.s3.name = "s3_bound";
  out.s3.params = "A=" + std::to_string(A);
  out.s3.lhs = s3.s;
  out.s3.rhs = k6pi2 * Ad * std::log(1.85 * Ad) + Ad - 1.0;
  out.s3.slack = slack_for(out.s3.lhs, out.s3.rhs);
  out.s3_asserted = A >= 27;
  return out;
}

SweepSummary lemma_sweep(const SieveTables& t, u64 x_max, bool sample_reals, u64 seed) {
  if (x_max > t.limit) throw precondition_error("lemma_sweep: x_max beyond sieve limit");
  SweepSummary sum;
  SplitMix64 rng(seed);
  Kahan phi_ratio, mu_d2, log_fact;
  u128 nphi = 0;
  for (u64 x = 1; x <= x_max; ++x) {
    phi_ratio.add(static_cast<double>(t.phi[x]) / static_cast<double>(x));
    nphi += static_cast<u128>(x) * t.phi[x];
    log_fact.add(std::log(static_cast<double>(x)));
    if (t.mu[x] != 0)
      mu_d2.add(static_cast<double>(t.mu[x]) / (static_cast<double>(x) * static_cast<double>(x)));

    double xs[2];
    int n_eval = 1;
    xs[0] = static_cast<double>(x);
    if (sample_reals && x >= 2) xs[n_eval++] = static_cast<double>(x) + 0.01 + 0.98 * rng.unit();

    for (int i = 0; i < n_eval; ++i) {
      double xv = xs[i];
      double logx = std::log(xv);
      InequalityReport r;
      r.params = "x=" + fmt_g(xv, 17);

      r.name = "phi_ratio_sum";
      r.lhs = phi_ratio.s;
      r.rhs = k6pi2 * xv + logx + 1.0;
      r.slack = slack_for(r.lhs, r.rhs);
      sum.absorb(r);

      r.name = "phi_n_sum";
      r.lhs = static_cast<double>(nphi);
      r.rhs = k2pi2 * xv * xv * xv + 0.5 * xv * xv * logx + xv * xv;
      r.slack = slack_for(r.lhs, r.rhs);
      sum.absorb(r);

      r.name = "log_sum";
      r.lhs = static_cast<double>(x) * logx - log_fact.s;
      r.rhs = xv - 1.0;
      r.slack = slack_for(r.lhs, r.rhs);
      sum.absorb(r);

      if (x >= 2) {
        r.name = "mertens_tail";
        r.lhs = std::fabs(k6pi2 - mu_d2.s);
        r.rhs = 1.0 / (3.0 * xv) + 8.0 / (3.0 * xv * xv);
        r.slack = slack_for(r.lhs, r.rhs);
        sum.absorb(r);
      }
    }
  }
  return sum;
}

SweepSummary s_sums_sweep(u64 a_max) {
  SweepSummary sum;
  u64 s1_times4 = 0;
  u64 s2_exact = 0;
  Kahan s3;
  for (u64 a2 = 2; a2 <= a_max; ++a2) {
    u64 col = 0;
    for (u64 a1 = 1; a1 < a2; ++a1) {
      col += 2 * (a1 + a2);
      u64 g = std::gcd(a1, a2);
      s2_exact += (a1 + a2) / g;
      s3.add(static_cast<double>(g) / static_cast<double>(a2));
    }
    s1_times4 += 2 * (col / a2);
    u64 A = a2;
    double Ad = static_cast<double>(A);

    InequalityReport r;
    r.params = "A=" + std::to_string(A);
    r.name = "s1_identity";
    u64 closed = 3 * A * (A - 1);
    r.lhs = static_cast<double>(s1_times4 > closed ? s1_times4 - closed : closed - s1_times4);
    r.rhs = 0.0;
    r.slack = 0.0;
    sum.absorb(r);

    if (A >= 11) {
      r.name = "s2_bound";
      r.lhs = static_cast<double>(s2_exact);
      r.rhs = 3.0 * consts::zeta3 / (consts::pi * consts::pi) * Ad * Ad * Ad +
              0.75 * consts::zeta2 * Ad * Ad * std::log(Ad) + 2.0 * Ad * Ad;
      r.slack = slack_for(r.lhs, r.rhs);
      sum.absorb(r);
    }
    if (A >= 27) {
      r.name = "s3_bound";
      r.lhs = s3.s;
      r.rhs = k6pi2 * Ad * std::log(1.85 * Ad) + Ad - 1.0;
      r.slack = slack_for(r.lhs, r.rhs);
      sum.absorb(r);
    }
  }
  return sum;
}

SweepSummary v_counts_random(u64 p_max, u64 general_instances, u64 tight_instances, u64 seed) {
  SweepSummary sum;
  SplitMix64 rng(seed);
  std::vector<u64> primes = primes_up_to(p_max);

  auto check_instance = [&](u64 p, u64 A, i64 M, u64 N, bool want_tight) {
    VCountReport rep = v_counts(p, A, M, N);
    InequalityReport r;
    r.params = "p=" + std::to_string(p) + " A=" + std::to_string(A) + " M=" + std::to_string(M) +
               " N=" + std::to_string(N);

    r.name = "v1_identity";
    r.lhs = static_cast<double>(rep.v1 > A * N ? rep.v1 - A * N : A * N - rep.v1);
    r.rhs = 0.0;
    r.slack = 0.0;
    sum.absorb(r);

    r.name = "v2_cauchy_schwarz";
    r.lhs = rep.cauchy_schwarz_floor;
    r.rhs = static_cast<double>(rep.v2);
    r.slack = slack_for(r.lhs, r.rhs);
    sum.absorb(r);

    if (want_tight) {
      r.name = "v2_bound_tight";
      r.lhs = static_cast<double>(rep.v2);
      r.rhs = rep.v2_bound_tight;
    } else {
      r.name = "v2_bound_general";
      r.lhs = static_cast<double>(rep.v2);
      r.rhs = rep.v2_bound_general;
    }
    r.slack = slack_for(r.lhs, r.rhs);
    sum.absorb(r);
  };

  // General bound: 28 <= A < N/12, N < p. Keep A*N modest so instances stay cheap.
  u64 made = 0;
  while (made < general_instances) {
    u64 p = primes[rng.in_range(primes.size() / 2, primes.size() - 1)];
    if (p < 400) continue;
    u64 A = rng.in_range(28, 40);
    u64 n_lo = 12 * A + 1;
    u64 n_hi = std::min<u64>(p - 1, n_lo + 4000);
    if (n_hi < n_lo) continue;
    u64 N = rng.in_range(n_lo, n_hi);
    i64 M = static_cast<i64>(rng.below(3 * p)) - static_cast<i64>(p);
    check_instance(p, A, M, N, false);
    ++made;
  }
  // Tight bound: A >= 30, N > 7A, 2AN < p.
  made = 0;
  while (made < tight_instances) {
    u64 p = primes[rng.in_range(primes.size() / 2, primes.size() - 1)];
    u64 A = rng.in_range(30, 40);
    u64 n_lo = 7 * A + 1;
    u64 n_hi = (p - 1) / (2 * A);
    if (n_hi <= n_lo) continue;
    u64 N = rng.in_range(n_lo, n_hi);
    i64 M = static_cast<i64>(rng.below(3 * p)) - static_cast<i64>(p);
    check_instance(p, A, M, N, true);
    ++made;
  }
  return sum;
}

SweepSummary v_identity_random(u64 p_max, u64 instances, u64 seed) {
  SweepSummary sum;
  SplitMix64 rng(seed);
  std::vector<u64> primes = primes_up_to(p_max);
  u64 made = 0;
  while (made < instances) {
    u64 p = primes[rng.in_range(primes.size() / 4, primes.size() - 1)];
    u64 A = rng.in_range(1, 64);
    u64 N = rng.in_range(0, std::min<u64>(p - 1, 2000));
    if (N == 0) N = 1;
    i64 M = static_cast<i64>(rng.below(4 * p)) - 2 * static_cast<i64>(p);
    VCountReport rep = v_counts(p, A, M, N);
    InequalityReport r;
    r.params = "p=" + std::to_string(p) + " A=" + std::to_string(A) + " M=" + std::to_string(M) +
               " N=" + std::to_string(N);
    r.name = "v1_identity";
    r.lhs = static_cast<double>(rep.v1 > A * N ? rep.v1 - A * N : A * N - rep.v1);
    r.rhs = 0.0;
    r.slack = 0.0;
    sum.absorb(r);
    r.name = "v2_cauchy_schwarz";
    r.lhs = rep.cauchy_schwarz_floor;
    r.rhs = static_cast<double>(rep.v2);
    r.slack = 1e-9 * std::max(1.0, r.lhs);
    sum.absorb(r);
    ++made;
  }
  return sum;
}

SweepSummary zeta2_log_sum_check(u64 a_min, u64 a_max) {
  SweepSummary sum;
  Kahan logd_d2;
  for (u64 d = 2; d <= a_max; ++d) {
    logd_d2.add(std::log(static_cast<double>(d)) / (static_cast<double>(d) * static_cast<double>(d)));
    if (d < a_min) continue;
    InequalityReport r;
    r.name = "zeta2_log_sum";
    r.params = "A=" + std::to_string(d);
    r.lhs = 1.5 * consts::zeta2 - 0.75 * logd_d2.s;
    r.rhs = 2.0;
    r.slack = slack_for(r.lhs, r.rhs);
    sum.absorb(r);
  }
  return sum;
}

}  // namespace burgess
