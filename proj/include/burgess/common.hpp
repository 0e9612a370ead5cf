#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burgess {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Violation of a documented precondition of an operation.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The hypothesis of a verification does not hold for the supplied data
// (distinct from a failed inequality, which is reported, not thrown).
struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace consts {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta2 = 1.6449340668482264365;  // pi^2/6
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double euler_gamma = 0.57721566490153286061;
// Mertens constant: lim_{x->inf} (sum_{p<=x} 1/p - log log x).
inline constexpr double mertens_b = 0.26149721284764278;
inline constexpr double inv_sqrt_e = 0.60653065971263342360;
inline constexpr double sqrt_e = 1.64872127070012814685;
inline constexpr double ln10 = 2.30258509299404568402;
}  // namespace consts

// Deterministic PRNG for randomized checks; identical streams on every
// platform, unlike <random> distributions.
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u64 below(u64 n) { return n ? next() % n : 0; }
  u64 in_range(u64 lo, u64 hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Exact rational, used for CLI inputs like "1/6" that must not be
// pre-converted to floating point by the parser.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  static Rational parse(const std::string& text);
};

}  // namespace burgess
