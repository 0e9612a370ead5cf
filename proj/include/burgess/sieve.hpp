#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "burgess/common.hpp"

namespace burgess {

// Euler phi and Moebius mu on [1, limit], filled by one linear sieve pass.
struct SieveTables {
  u64 limit = 0;
  std::vector<u32> phi;      // phi[n], index 0 unused
  std::vector<int8_t> mu;    // mu[n] in {-1, 0, 1}

  static SieveTables build(u64 limit);
};

std::vector<u64> primes_up_to(u64 n);

// Streams every prime in [lo, hi] in increasing order through fn.
// Segmented, so hi may be large (up to ~1e12) with small memory.
void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn);

}  // namespace burgess
