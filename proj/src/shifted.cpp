#include "residue_lab/shifted.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rlab {

ShiftPattern make_pattern(u64 p, std::vector<u64> shifts, std::vector<ResidueClass> signs) {
    if (signs.size() != shifts.size() + 1)
        fail(Err::PreconditionViolated, "make_pattern: need one sign per factor (k+1 signs)");
    ShiftPattern out;
    out.signs.push_back(signs[0]);
    for (size_t i = 0; i < shifts.size(); ++i) {
        u64 s = shifts[i] % p;
        if (s == 0) continue; // the unshifted factor already covers s = 0
        bool seen = false;
        for (u64 t : out.shifts)
            if (t == s) {
                seen = true;
                break;
            }
        if (seen) continue;
        out.shifts.push_back(s);
        out.signs.push_back(signs[i + 1]);
    }
    if (out.shifts.size() > 62)
        fail(Err::PreconditionViolated, "make_pattern: k must stay below 63");
    return out;
}

FpSet shifted_intersection_add(const FpSet& a, const std::vector<u64>& shifts) {
    u64 p = a.modulus();
    FpSet out = a;
    for (u64 s : shifts) {
        u64 sm = s % p;
        if (sm == 0 || out.empty()) continue;
        FpSet next(p);
        out.for_each([&](u64 x) {
            if (a.contains(add_mod(x, sm, p))) next.add(x);
        });
        out = std::move(next);
    }
    return out;
}

FpSet shifted_intersection_mul(const FpSet& a, const std::vector<u64>& shifts) {
    u64 p = a.modulus();
    FpSet out = a;
    for (u64 s : shifts) {
        u64 sm = s % p;
        if (sm == 0) fail(Err::ZeroShift, "shifted_intersection_mul: zero shift");
        if (out.empty()) continue;
        FpSet next(p);
        out.for_each([&](u64 x) {
            if (a.contains(mul_mod(x, sm, p))) next.add(x);
        });
        out = std::move(next);
    }
    return out;
}

FpSet q_set(const PrimeContext& ctx, u64 a, u64 b, ResidueClass variant) {
    u64 p = ctx.p();
    a %= p;
    b %= p;
    if (a == b) fail(Err::EqualShifts, "q_set: a and b must differ");
    int want = static_cast<int>(variant);
    FpSet out(p);
    for (u64 x = 0; x < p; ++x) {
        u64 den = add_mod(x, a, p);
        if (den == 0) continue;
        u64 num = add_mod(x, b, p);
        u64 v = mul_mod(num, inverse_mod(den, p), p);
        if (ctx.chi(v) == want) out.add(x);
    }

    // Post-check: the same set must arise as (a-b)/(T-1) - b with T the
    // selected class, since T is closed under inversion.
    const FpSet& cls = variant == ResidueClass::R ? ctx.residues() : ctx.nonresidues();
    FpSet image(p);
    u64 amb = sub_mod(a, b, p);
    cls.for_each([&](u64 t) {
        if (t == 1) return;
        u64 x = sub_mod(mul_mod(amb, inverse_mod(sub_mod(t, 1, p), p), p), b, p);
        image.add(x);
    });
    if (!(image == out)) throw std::logic_error("q_set: Moebius-image cross-check failed");
    return out;
}

u64 count_pattern_matches_serial(const PrimeContext& ctx, const ShiftPattern& pattern) {
    u64 p = ctx.p();
    u64 count = 0;
    for (u64 x = 0; x < p; ++x) {
        bool ok = ctx.chi(x) == static_cast<int>(pattern.signs[0]);
        for (size_t i = 0; ok && i < pattern.shifts.size(); ++i) {
            u64 y = add_mod(x, pattern.shifts[i], p);
            ok = ctx.chi(y) == static_cast<int>(pattern.signs[i + 1]);
        }
        if (ok) ++count;
    }
    return count;
}

u64 count_pattern_matches(const PrimeContext& ctx, const ShiftPattern& pattern) {
    u64 p = ctx.p();
    const size_t k = pattern.shifts.size();
    u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (i64 xi = 0; xi < static_cast<i64>(p); ++xi) {
        u64 x = static_cast<u64>(xi);
        bool ok = ctx.chi(x) == static_cast<int>(pattern.signs[0]);
        for (size_t i = 0; ok && i < k; ++i) {
            u64 y = x + pattern.shifts[i];
            if (y >= p) y -= p;
            ok = ctx.chi(y) == static_cast<int>(pattern.signs[i + 1]);
        }
        if (ok) ++count;
    }
    return count;
}

BoundCheck weil_check(const PrimeContext& ctx, const ShiftPattern& pattern) {
    u64 p = ctx.p();
    u64 value = count_pattern_matches(ctx, pattern);
    double k = static_cast<double>(pattern.k());
    double rhs = static_cast<double>(p) / std::ldexp(1.0, static_cast<int>(pattern.k()) + 1) +
                 k * std::sqrt(static_cast<double>(p)) + std::ldexp(1.0, -20);
    std::string params = "k=" + std::to_string(pattern.k());
    return make_check(p, "shifted_intersection", value, rhs, value <= rhs, "weil-shift-bound",
                      params);
}

ShiftPattern random_pattern(const PrimeContext& ctx, u64 kmax, u64 seed) {
    u64 p = ctx.p();
    std::mt19937_64 rng(seed);
    u64 limit = std::min<u64>(kmax, p - 1);
    u64 k = 1 + rng() % std::max<u64>(limit, 1);
    std::vector<u64> shifts;
    while (shifts.size() < k) {
        u64 s = 1 + rng() % (p - 1);
        if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
    }
    std::vector<ResidueClass> signs;
    for (u64 i = 0; i <= k; ++i)
        signs.push_back((rng() & 1) ? ResidueClass::R : ResidueClass::N);
    return make_pattern(p, std::move(shifts), std::move(signs));
}

} // namespace rlab
