#include "residue_lab/number.hpp"

#include "residue_lab/error.hpp"

#include <algorithm>

namespace rlab {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

u64 inverse_mod(u64 x, u64 p) {
    x %= p;
    if (x == 0) fail(Err::ZeroInverse, "inverse_mod: 0 has no inverse");
    // Extended Euclid over signed 128-bit intermediates.
    i64 t = 0, new_t = 1;
    u64 r = p, new_r = x;
    while (new_r != 0) {
        u64 q = r / new_r;
        i64 tmp_t = t - static_cast<i64>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        u64 tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    return t < 0 ? static_cast<u64>(t + static_cast<i64>(p)) : static_cast<u64>(t);
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<u64>(lo, 2);
    // Segmented sieve over [lo, hi] with base primes up to sqrt(hi).
    u64 root = 1;
    while (u128(root + 1) * (root + 1) <= hi) ++root;
    std::vector<bool> base(root + 1, true);
    for (u64 i = 2; i * i <= root; ++i)
        if (base[i])
            for (u64 j = i * i; j <= root; j += i) base[j] = false;

    std::vector<bool> seg(hi - lo + 1, true);
    for (u64 q = 2; q <= root; ++q) {
        if (!base[q]) continue;
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 m = start; m <= hi; m += q) seg[m - lo] = false;
    }
    for (u64 n = lo; n <= hi; ++n)
        if (n >= 2 && seg[n - lo] && (n <= root ? base[n] : true)) out.push_back(n);
    return out;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 48;
    while (v > 0) {
        buf[--i] = char('0' + int(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 48);
}

u64 mix_seed(u64 seed, u64 a, u64 b) {
    u64 z = seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xBF58476D1CE4E5B9ull);
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace rlab
