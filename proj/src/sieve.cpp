#include "burgess/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace burgess {

SieveTables SieveTables::build(u64 limit) {
  if (limit < 1) throw precondition_error("SieveTables: limit must be >= 1");
  SieveTables t;
  t.limit = limit;
  t.phi.assign(limit + 1, 0);
  t.mu.assign(limit + 1, 0);
  t.phi[1] = 1;
  t.mu[1] = 1;
  std::vector<u32> primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<u32>(i));
      t.phi[i] = static_cast<u32>(i - 1);
      t.mu[i] = -1;
    }
    for (u32 p : primes) {
      u64 ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        t.phi[ip] = t.phi[i] * p;
        t.mu[ip] = 0;
        break;
      }
      t.phi[ip] = t.phi[i] * (p - 1);
      t.mu[ip] = static_cast<int8_t>(-t.mu[i]);
    }
  }
  return t;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
  if (hi < 2 || hi < lo) return;
  lo = std::max<u64>(lo, 2);
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 1;
  std::vector<u64> base = primes_up_to(root);
  constexpr u64 kSegment = 1 << 20;
  std::vector<char> sieve;
  for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    u64 seg_hi = std::min(hi, seg_lo + kSegment - 1);
    sieve.assign(seg_hi - seg_lo + 1, 1);
    for (u64 p : base) {
      if (p * p > seg_hi) break;
      u64 start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (u64 m = start; m <= seg_hi; m += p) sieve[m - seg_lo] = 0;
    }
    for (u64 n = seg_lo; n <= seg_hi; ++n) {
      if (sieve[n - seg_lo]) fn(n);
    }
  }
}

}  // namespace burgess
