#pragma once

#include <vector>

#include "burgess/common.hpp"

namespace burgess {

// a*b mod m without overflow for m < 2^63.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

// Prime factorization via trial division + Pollard rho (Brent variant).
std::vector<u64> factor(u64 n);                  // with multiplicity, sorted
std::vector<u64> distinct_prime_factors(u64 n);  // sorted
std::vector<u64> divisors(u64 n);                // all divisors, sorted

// Inverse of a mod m via extended gcd; throws precondition_error if
// gcd(a, m) != 1.
u64 mod_inverse(u64 a, u64 m);

// Least generator of (Z/pZ)^*. Throws precondition_error unless p is an
// odd prime.
u64 find_primitive_root(u64 p);

}  // namespace burgess
