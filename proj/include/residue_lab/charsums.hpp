#pragma once

#include "residue_lab/bound_check.hpp"
#include "residue_lab/field_core.hpp"

#include <cstdint>
#include <vector>

namespace rlab {

// Sum of chi(x) over the window x = s+1, ..., s+h (mod p). chi(0) terms
// contribute 0.
i64 char_sum_interval(const PrimeContext& ctx, u64 s, u64 h);

// |sum of chi((x+a)(x+a+1))| over the same window, against
// h (1 - 1/(2 d_*(p))) + 4. The overload taking d_star avoids recomputing
// the run statistics inside sweeps.
BoundCheck char_sum_quadratic(const PrimeContext& ctx, u64 a, u64 s, u64 h);
BoundCheck char_sum_quadratic(const PrimeContext& ctx, u64 a, u64 s, u64 h, u64 d_star);
double quadratic_charsum_rhs(u64 h, u64 d_star);

enum class SplitVariant { First, Second };

// kind: 'R' / 'N' pure piece, 'I' alternating piece, 'Z' the zero element.
struct SplitPiece {
    u64 start = 0;
    u64 length = 0;
    char kind = 'I';
};

// chi_sum is the sum of chi(x(x+1)) over the h-1 adjacent pairs lying
// inside the window; with that convention the first-variant identity
// chi_sum = h - 2(n_R + n_N) + 1 is exact on every 0-free window, because
// maximal pure runs alternate and every piece boundary is a sign change.
struct SplittingReport {
    SplitVariant variant = SplitVariant::First;
    u64 n_R = 0;
    u64 n_N = 0;
    u64 s_alt = 0; // number of alternating pieces (second variant)
    std::vector<SplitPiece> pieces;
    i64 chi_sum = 0;
    bool contains_zero = false;
};

// First variant: the window splits into maximal pure residue/non-residue
// intervals. Second variant: maximal pure runs of length >= 2 stay as
// pieces, leftover stretches of length-1 runs become alternating pieces;
// ties resolve left-to-right in favor of the pure run.
SplittingReport split_window(const PrimeContext& ctx, u64 s, u64 h, SplitVariant variant);

struct QuadraticRun {
    u64 h = 0; // longest window with (x+a)(x+a+1) all residues
    u64 s = 0; // witness: the window is s+1, ..., s+h
};

QuadraticRun max_quadratic_run(const PrimeContext& ctx, u64 a);

} // namespace rlab
