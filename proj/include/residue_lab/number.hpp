#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// All scalar modular arithmetic widens through 128 bits, so it stays exact
// for moduli far beyond the dense-table cap.
inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Inverse of x modulo prime p; throws Err::ZeroInverse when x == 0 (mod p).
u64 inverse_mod(u64 x, u64 p);

// All primes q with lo <= q <= hi, ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

std::string u128_to_string(u128 v);

// SplitMix64-style mixer for deriving independent sub-seeds from
// (seed, index) pairs; reproducible across runs.
u64 mix_seed(u64 seed, u64 a, u64 b = 0);

} // namespace rlab
