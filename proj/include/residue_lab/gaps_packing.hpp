#pragma once

#include "residue_lab/field_core.hpp"
#include "residue_lab/fpset.hpp"

#include <map>
#include <string>

namespace rlab {

// Run statistics of R and N. The paper's "maximal distance between
// quadratic residues" is the longest run inside N; both directions are
// reported to sidestep the distance/run-length off-by-one.
struct GapStats {
    u64 p = 0;
    u64 maxrun_R = 0;
    u64 maxrun_N = 0;
    u64 d_star = 0; // max(maxrun_R, maxrun_N)
    std::map<u64, u64> run_histogram_R;
    std::map<u64, u64> run_histogram_N;
};

GapStats gap_stats(const PrimeContext& ctx);

struct PackingResult {
    u64 value = 0;
    FpSet witness;
    std::string target_name;
    bool exact = true; // false for the greedy lower-bound mode of s_of_set
};

// Maximum number of pairwise disjoint length-h windows x+[0,h) inside the
// target. The window set T is computed by a sliding scan; a cut at any
// element outside the target linearizes the circle (no feasible window can
// cover it), after which the earliest-start greedy is exactly optimal.
// The full set is the one special case, packed evenly.
PackingResult s_of_h(const FpSet& target, u64 h, std::string target_name = "");

enum class PackingMode { Exact, Greedy };

// General pattern version: max S with S + A direct and inside the target,
// i.e. a max independent set in the conflict graph over T = {x : x+A in
// target} with differences drawn from (A-A) \ {0}. Exact mode runs branch
// and bound and is capped at |T| <= 40; greedy is a labeled lower bound.
PackingResult s_of_set(const FpSet& target, const FpSet& a, PackingMode mode,
                       std::string target_name = "");

struct Interval {
    u64 start = 0;
    u64 length = 0;
};

struct LocalPacking {
    PackingResult packing;
    bool hypothesis_ok = false; // 16 |I| h^2 < p log^2 p
};

LocalPacking local_s_of_h(const PrimeContext& ctx, Interval I, u64 h);

struct PairCoverage {
    u64 h_R = 0; // minimal h forcing a consecutive residue pair into every window
    u64 h_N = 0;
    u64 h_min = 0; // max(h_R, h_N)
};

PairCoverage consecutive_pair_coverage(const PrimeContext& ctx);

// Correction factor of the distribution bound; three-regime table and the
// closed form min{h / min{h/2, log p}, log p}. They agree within a factor
// of 2. Logarithms are base 2 throughout.
double delta_p(u64 p, u64 h);
double delta_p_closed(u64 p, u64 h);

// h >= 2 log p - 4 log(C log p) + 4
bool cond_h(u64 p, u64 h, double C);

// C_* sqrt(p) log^2 p log^2(4h / min{h, 2 log p}) delta_p(h) / h^2, with
// C_* = C for h <= 2 log p and 1 otherwise.
double distribution_rhs(u64 p, u64 h, double C);

} // namespace rlab
