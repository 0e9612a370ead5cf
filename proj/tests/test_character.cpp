#include "burgess/character.hpp"

#include <cmath>

#include "burgess/modmath.hpp"
#include "doctest.h"

using namespace burgess;

TEST_CASE("construction validates inputs") {
  CHECK_THROWS_AS(CharacterGroup::build(4), precondition_error);
  CHECK_THROWS_AS(DirichletCharacter(7, 4, 0), precondition_error);  // 4 does not divide 6
  CHECK_THROWS_AS(DirichletCharacter(7, 3, 3), precondition_error);
  CHECK_THROWS_AS(DirichletCharacter::quadratic(9), precondition_error);
}

TEST_CASE("char_eval basics") {
  DirichletCharacter chi7 = DirichletCharacter::quadratic(7);
  // Euler criterion oracle: 3^3 = 27 == 6 == -1 (mod 7)
  CHECK(pow_mod(3, 3, 7) == 6);
  CHECK(*chi7.eval(3).exact == -1);
  CHECK(*chi7.eval(7).exact == 0);
  CHECK(*chi7.eval(14).exact == 0);
  CHECK(*chi7.eval(-4).exact == *chi7.eval(3).exact);  // -4 == 3 (mod 7)

  DirichletCharacter chi5 = DirichletCharacter::quadratic(5);
  CHECK(*chi5.eval(4).exact == 1);  // 4 = 2^2
}

TEST_CASE("table and Euler quadratic paths agree exactly") {
  auto group = CharacterGroup::build(101);
  DirichletCharacter table_chi(group, 2, 1);
  DirichletCharacter euler_chi = DirichletCharacter::quadratic(101);
  for (u64 n = 0; n < 101; ++n) {
    CHECK(*table_chi.eval(static_cast<i64>(n)).exact ==
          *euler_chi.eval(static_cast<i64>(n)).exact);
    CHECK(table_chi.eval(static_cast<i64>(n)).value ==
          table_chi.eval(static_cast<i64>(n + 101)).value);
  }
}

TEST_CASE("multiplicativity: exponent arithmetic is exact") {
  auto group = CharacterGroup::build(97);
  for (u64 idx : {1ULL, 5ULL, 32ULL, 48ULL, 95ULL}) {
    DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
    u64 d = chi.order();
    for (u64 a = 1; a < 97; a += 7) {
      for (u64 b = 1; b < 97; b += 5) {
        u64 ab = a * b % 97;
        CHECK(*chi.exponent_of(static_cast<i64>(ab)) ==
              (*chi.exponent_of(static_cast<i64>(a)) + *chi.exponent_of(static_cast<i64>(b))) % d);
        std::complex<double> prod = chi.eval(static_cast<i64>(a)).value *
                                    chi.eval(static_cast<i64>(b)).value;
        CHECK(std::abs(prod - chi.eval(static_cast<i64>(ab)).value) < 1e-12);
      }
    }
  }
}

TEST_CASE("char_sum: orthogonality, short sums, empty range") {
  auto group = CharacterGroup::build(31);
  for (u64 idx = 1; idx < 30; ++idx) {
    DirichletCharacter chi = DirichletCharacter::from_group_index(group, idx);
    CharSumValue full = chi.sum(0, 31);
    if (chi.order() <= 2) {
      CHECK(*full.exact == 0);
    } else {
      CHECK(std::abs(full.value) < 1e-9 * 31);
    }
    CHECK(std::abs(chi.sum(4, 0).value) == 0.0);  // empty range
  }

  DirichletCharacter chi7 = DirichletCharacter::quadratic(7);
  CHECK(*chi7.sum(0, 3).exact == 1);  // residues mod 7 are {1,2,4}: 1+1-1
  CHECK(*chi7.sum(0, 7).exact == 0);
}

TEST_CASE("char_sum is periodic in M and bounded by N") {
  auto group = CharacterGroup::build(43);
  DirichletCharacter chi = DirichletCharacter::from_group_index(group, 7);
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    u64 m = rng.below(43);
    u64 n = rng.below(60);
    CHECK(std::abs(chi.sum(m, n).value - chi.sum(m + 43, n).value) < 1e-12);
    CHECK(std::abs(chi.sum(m, n).value) <= static_cast<double>(n) + 1e-12);
  }
}

TEST_CASE("shift identity S(M,N) = S(M+h,N) + S(M,h) - S(M+N,h)") {
  DirichletCharacter quad = DirichletCharacter::quadratic(103);
  for (u64 h : {1ULL, 3ULL, 10ULL}) {
    i64 lhs = *quad.sum(5, 40).exact;
    i64 rhs = *quad.sum(5 + h, 40).exact + *quad.sum(5, h).exact - *quad.sum(5 + 40, h).exact;
    CHECK(lhs == rhs);
  }
  auto group = CharacterGroup::build(103);
  DirichletCharacter chi = DirichletCharacter::from_group_index(group, 5);
  for (u64 h : {2ULL, 7ULL}) {
    std::complex<double> lhs = chi.sum(11, 30).value;
    std::complex<double> rhs =
        chi.sum(11 + h, 30).value + chi.sum(11, h).value - chi.sum(11 + 30, h).value;
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("polya_vinogradov_bound closed form") {
  CHECK(polya_vinogradov_bound(7) == doctest::Approx(std::sqrt(7.0) * std::log(7.0)));
  CHECK(polya_vinogradov_bound(7) == doctest::Approx(5.148394).epsilon(1e-5));
  CHECK(polya_vinogradov_bound(101) == doctest::Approx(std::sqrt(101.0) * std::log(101.0)));
  CHECK_THROWS_AS(polya_vinogradov_bound(10), precondition_error);
}

TEST_CASE("polya_vinogradov exhaustive at p = 101") {
  InequalityReport r = polya_vinogradov_exhaustive(101);
  CHECK(r.holds());
  CHECK(r.lhs > 0.0);
  CHECK(r.rhs == doctest::Approx(46.3814).epsilon(1e-4));
}
