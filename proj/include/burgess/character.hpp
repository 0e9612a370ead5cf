#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "burgess/common.hpp"
#include "burgess/report.hpp"

namespace burgess {

// Value of chi(n) or of a finite character sum. The exact integer is
// present iff the character order is <= 2, where every value is in
// {-1, 0, 1} and sums stay integral.
struct CharSumValue {
  std::complex<double> value{0.0, 0.0};
  std::optional<i64> exact;
};

// Discrete-log table for the full character group mod p, shared by all
// characters to the same modulus. One pass of successive multiplication
// by the least primitive root g: index_of(g^j) = j.
class CharacterGroup {
 public:
  static std::shared_ptr<const CharacterGroup> build(u64 p);

  u64 modulus() const { return p_; }
  u64 primitive_root() const { return g_; }
  u64 index_of(u64 n) const { return index_[n]; }  // n in [1, p)
  const std::complex<double>& root(u64 j) const { return roots_[j]; }  // e^{2 pi i j/(p-1)}

 private:
  u64 p_ = 0;
  u64 g_ = 0;
  std::vector<u32> index_;
  std::vector<std::complex<double>> roots_;
};

// Multiplicative character mod an odd prime p with chi(g) = e^{2 pi i m/d},
// d | p-1, 0 <= m < d; equivalently exponent m(p-1)/d in the full group.
// Immutable after construction and safe to share across threads.
//
// Two evaluation modes:
//   - table mode (p <= 2^31): any order, via the group's index table;
//   - Euler mode (any p <= 2^62): order <= 2 only, chi(n) from
//     n^{(p-1)/2} mod p with overflow-safe multiplication.
class DirichletCharacter {
 public:
  DirichletCharacter(u64 p, u64 d, u64 m);
  DirichletCharacter(std::shared_ptr<const CharacterGroup> group, u64 d, u64 m);

  // The quadratic character mod p, table-free.
  static DirichletCharacter quadratic(u64 p);
  // Character with exponent idx in the full group (idx in [0, p-2]).
  static DirichletCharacter from_group_index(std::shared_ptr<const CharacterGroup> group, u64 idx);

  u64 modulus() const { return p_; }
  u64 order() const { return d_; }
  u64 character_index() const { return m_; }
  u64 group_index() const { return group_exp_; }
  bool is_principal() const { return m_ == 0; }
  bool has_table() const { return group_ != nullptr; }
  const std::shared_ptr<const CharacterGroup>& group() const { return group_; }

  // Exponent class e in [0, d) with chi(n) = e^{2 pi i e/d}; nullopt iff p | n.
  std::optional<u64> exponent_of(i64 n) const;
  CharSumValue eval(i64 n) const;

  // S(M, N) = sum of chi(n) over M < n <= M+N, each term reduced mod p.
  // Compensated summation on the complex path; N = 0 gives 0.
  CharSumValue sum(u64 m_start, u64 n_len) const;

  DirichletCharacter conjugate() const;

 private:
  DirichletCharacter() = default;

  std::shared_ptr<const CharacterGroup> group_;
  u64 p_ = 0;
  u64 d_ = 1;
  u64 m_ = 0;
  u64 group_exp_ = 0;

  u64 reduce(i64 n) const;
};

// sqrt(p) * log p: the Polya-Vinogradov bound with constant 1.
double polya_vinogradov_bound(u64 p);

// max over all non-principal chi mod p, 0 <= M < p, 1 <= N <= p of
// |S(M, N)|, checked against sqrt(p) log p. Exhaustive via prefix sums.
InequalityReport polya_vinogradov_exhaustive(u64 p);

}  // namespace burgess
