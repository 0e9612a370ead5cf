#include "burgess/modmath.hpp"

#include <algorithm>
#include <numeric>

namespace burgess {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  SplitMix64 rng(n ^ 0xdeadbeefULL);
  while (true) {
    u64 c = rng.below(n - 1) + 1;
    u64 x = rng.below(n);
    u64 y = x, d = 1;
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    // Brent's cycle detection with batched gcds.
    u64 ys = y, q = 1;
    for (u64 r = 1; d == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && d == 1; k += 128) {
        ys = y;
        u64 lim = std::min<u64>(128, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      d = 1;
      do {
        ys = step(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<u64> factor(u64 n) {
  std::vector<u64> out;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> f = factor(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> f = factor(n);
  std::vector<u64> divs{1};
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    std::size_t mult = j - i;
    std::size_t base_count = divs.size();
    u64 pk = 1;
    for (std::size_t e = 1; e <= mult; ++e) {
      pk *= f[i];
      for (std::size_t b = 0; b < base_count; ++b) divs.push_back(divs[b] * pk);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 mod_inverse(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw precondition_error("mod_inverse: arguments are not coprime");
  if (t < 0) t += static_cast<i64>(m);
  return static_cast<u64>(t);
}

u64 find_primitive_root(u64 p) {
  if (p < 3 || !is_prime(p)) throw precondition_error("find_primitive_root: p must be an odd prime");
  std::vector<u64> qs = distinct_prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("find_primitive_root: no generator found");
}

}  // namespace burgess
