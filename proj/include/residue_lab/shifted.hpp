#pragma once

#include "residue_lab/bound_check.hpp"
#include "residue_lab/field_core.hpp"
#include "residue_lab/fpset.hpp"

#include <vector>

namespace rlab {

enum class ResidueClass : int8_t { R = 1, N = -1 };

// k distinct nonzero shifts plus k+1 class selectors; signs[0] picks the
// class of the unshifted factor. k <= 62 keeps 2^(k+1) in native integers.
struct ShiftPattern {
    std::vector<u64> shifts;
    std::vector<ResidueClass> signs;
    size_t k() const { return shifts.size(); }
};

// Normalizes (drops zero shifts, deduplicates keeping the first sign seen,
// reduces mod p) and validates the pattern invariants.
ShiftPattern make_pattern(u64 p, std::vector<u64> shifts, std::vector<ResidueClass> signs);

// A intersected with A - s for every s in S; s = 0 is the identity factor.
FpSet shifted_intersection_add(const FpSet& a, const std::vector<u64>& shifts);

// A intersected with A * s^-1 for every s in S; shifts must be nonzero.
FpSet shifted_intersection_mul(const FpSet& a, const std::vector<u64>& shifts);

// Q_{a,b} = {x : (x+b)/(x+a) in R} (variant R) or the N variant; a != b.
// x = -a is excluded by the zero denominator, x = -b lands on chi = 0.
FpSet q_set(const PrimeContext& ctx, u64 a, u64 b, ResidueClass variant);

// Exact size of the mixed intersection of shifted residue/non-residue sets
// against p/2^(k+1) + k*sqrt(p). A tiny guard is added to the right side so
// float rounding can never fail a true instance.
BoundCheck weil_check(const PrimeContext& ctx, const ShiftPattern& pattern);

// Counting kernel behind weil_check: number of x with
// chi(x + s_i) = signs[i] for every factor. The _serial variant is the
// reference implementation the tests compare against.
u64 count_pattern_matches(const PrimeContext& ctx, const ShiftPattern& pattern);
u64 count_pattern_matches_serial(const PrimeContext& ctx, const ShiftPattern& pattern);

// Seeded random pattern with 1 <= k <= kmax distinct nonzero shifts and
// uniform signs; reproducible.
ShiftPattern random_pattern(const PrimeContext& ctx, u64 kmax, u64 seed);

} // namespace rlab
