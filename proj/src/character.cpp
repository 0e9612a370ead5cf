#include "burgess/character.hpp"

#include <cmath>
#include <numeric>

#include "burgess/modmath.hpp"

namespace burgess {

std::shared_ptr<const CharacterGroup> CharacterGroup::build(u64 p) {
  if (p < 3 || !is_prime(p)) throw precondition_error("CharacterGroup: p must be an odd prime");
  if (p > (1ULL << 31)) throw precondition_error("CharacterGroup: table mode is capped at p <= 2^31");
  auto g = std::make_shared<CharacterGroup>();
  g->p_ = p;
  g->g_ = find_primitive_root(p);
  g->index_.assign(p, 0);
  u64 cur = 1;
  for (u64 j = 0; j + 1 < p; ++j) {
    g->index_[cur] = static_cast<u32>(j);
    cur = mul_mod(cur, g->g_, p);
  }
  g->roots_.resize(p - 1);
  const double step = 2.0 * consts::pi / static_cast<double>(p - 1);
  for (u64 j = 0; j + 1 < p; ++j) g->roots_[j] = std::polar(1.0, step * static_cast<double>(j));
  return g;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> group, u64 d, u64 m)
    : group_(std::move(group)) {
  if (!group_) throw precondition_error("DirichletCharacter: null group");
  p_ = group_->modulus();
  if (d == 0 || (p_ - 1) % d != 0) throw precondition_error("DirichletCharacter: order must divide p-1");
  if (m >= d) throw precondition_error("DirichletCharacter: character index must be in [0, d)");
  d_ = d;
  m_ = m;
  group_exp_ = m * ((p_ - 1) / d);
}

DirichletCharacter::DirichletCharacter(u64 p, u64 d, u64 m)
    : DirichletCharacter(CharacterGroup::build(p), d, m) {}

DirichletCharacter DirichletCharacter::quadratic(u64 p) {
  if (p < 3 || p > (1ULL << 62) || !is_prime(p))
    throw precondition_error("quadratic character: p must be an odd prime <= 2^62");
  DirichletCharacter chi;
  chi.p_ = p;
  chi.d_ = 2;
  chi.m_ = 1;
  chi.group_exp_ = (p - 1) / 2;
  return chi;
}

DirichletCharacter DirichletCharacter::from_group_index(std::shared_ptr<const CharacterGroup> group,
                                                        u64 idx) {
  u64 p = group->modulus();
  if (idx >= p - 1) throw precondition_error("from_group_index: index must be in [0, p-1)");
  u64 g = std::gcd(idx, p - 1);  // gcd(0, p-1) = p-1, giving the principal character
  return DirichletCharacter(std::move(group), (p - 1) / g, idx / g);
}

u64 DirichletCharacter::reduce(i64 n) const {
  i64 r = n % static_cast<i64>(p_);
  if (r < 0) r += static_cast<i64>(p_);
  return static_cast<u64>(r);
}

std::optional<u64> DirichletCharacter::exponent_of(i64 n) const {
  u64 r = reduce(n);
  if (r == 0) return std::nullopt;
  if (group_) return mul_mod(group_exp_, group_->index_of(r), p_ - 1) / ((p_ - 1) / d_);
  // Euler criterion: n^{(p-1)/2} is 1 for residues, p-1 for non-residues.
  if (m_ == 0) return 0;
  u64 t = pow_mod(r, (p_ - 1) / 2, p_);
  if (t == 1) return 0;
  if (t == p_ - 1) return 1;
  throw std::logic_error("exponent_of: modulus is not prime");
}

CharSumValue DirichletCharacter::eval(i64 n) const {
  CharSumValue v;
  std::optional<u64> e = exponent_of(n);
  if (!e) {
    if (d_ <= 2) v.exact = 0;
    return v;
  }
  if (d_ <= 2) {
    i64 s = (*e == 0) ? 1 : -1;
    v.exact = s;
    v.value = {static_cast<double>(s), 0.0};
    return v;
  }
  v.value = group_->root(*e * ((p_ - 1) / d_));
  return v;
}

CharSumValue DirichletCharacter::sum(u64 m_start, u64 n_len) const {
  CharSumValue out;
  double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;  // Kahan compensation
  i64 exact = 0;
  for (u64 n = m_start + 1; n <= m_start + n_len; ++n) {
    CharSumValue t = eval(static_cast<i64>(n));
    if (d_ <= 2) {
      exact += *t.exact;
      continue;
    }
    double yr = t.value.real() - cre;
    double tr = re + yr;
    cre = (tr - re) - yr;
    re = tr;
    double yi = t.value.imag() - cim;
    double ti = im + yi;
    cim = (ti - im) - yi;
    im = ti;
  }
  if (d_ <= 2) {
    out.exact = exact;
    out.value = {static_cast<double>(exact), 0.0};
  } else {
    out.value = {re, im};
  }
  return out;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter chi(*this);
  chi.m_ = m_ == 0 ? 0 : d_ - m_;
  chi.group_exp_ = chi.m_ * ((p_ - 1) / d_);
  return chi;
}

double polya_vinogradov_bound(u64 p) {
  if (p < 3 || !is_prime(p)) throw precondition_error("polya_vinogradov_bound: p must be an odd prime");
  double pd = static_cast<double>(p);
  return std::sqrt(pd) * std::log(pd);
}

InequalityReport polya_vinogradov_exhaustive(u64 p) {
  double bound = polya_vinogradov_bound(p);
  auto group = CharacterGroup::build(p);
  // S(M, N) with 0 <= M < p, 1 <= N <= p is P[b] - P[a] for prefix sums
  // P over one period (the full-period sum vanishes for non-principal chi),
  // so the maximum is the diameter of the prefix-sum point set.
  double max_abs2 = 0.0;
  u64 worst_index = 0;
  std::vector<std::complex<double>> prefix(p);
  for (u64 idx = 1; idx + 1 < p; ++idx) {
    DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
    prefix[0] = {0.0, 0.0};
    for (u64 n = 1; n < p; ++n) prefix[n] = prefix[n - 1] + chi.eval(static_cast<i64>(n)).value;
    for (u64 a = 0; a < p; ++a) {
      for (u64 b = a + 1; b < p; ++b) {
        double dr = prefix[b].real() - prefix[a].real();
        double di = prefix[b].imag() - prefix[a].imag();
        double abs2 = dr * dr + di * di;
        if (abs2 > max_abs2) {
          max_abs2 = abs2;
          worst_index = idx;
        }
      }
    }
  }
  InequalityReport r;
  r.name = "polya_vinogradov_const1";
  r.params = "p=" + std::to_string(p) + " worst_chi=" + std::to_string(worst_index);
  r.lhs = std::sqrt(max_abs2);
  r.rhs = bound;
  r.slack = 1e-9 * static_cast<double>(p);
  return r;
}

}  // namespace burgess
