#pragma once

#include "residue_lab/bound_check.hpp"
#include "residue_lab/field_core.hpp"
#include "residue_lab/fpset.hpp"
#include "residue_lab/gaps_packing.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rlab {

// Generalized arithmetic progression {base + sum_j step_j * x_j : 0 <= x_j
// < length_j}. Indices are 0-based; the base absorbs any offset.
struct GapLeg {
    u64 step = 0;
    u64 length = 1;
};

struct GapDescriptor {
    u64 base = 0;
    std::vector<GapLeg> legs;
    size_t rank() const { return legs.size(); }
    u128 nominal_size() const {
        u128 n = 1;
        for (const GapLeg& l : legs) n *= l.length;
        return n;
    }
};

// Enumeration cap: product of leg lengths at most 10^7.
FpSet gap_elements(const GapDescriptor& g, u64 p);
bool is_proper(const GapDescriptor& g, u64 p);

// Text format: "p=<int>; base=<int>; legs=(step,len);(step,len);..."
std::string format_gap(const GapDescriptor& g, u64 p);
GapDescriptor parse_gap(const std::string& line, u64& p_out);

struct ApResult {
    u64 length = 0;
    u64 step = 0;
    u64 base = 0;
};

// Longest arithmetic progression with arbitrary nonzero step inside R.
// Dilating by the step inverse turns any step-lambda progression into a
// step-1 run of R or N, so the answer is d_*(p) with an explicit witness.
ApResult max_ap_in_r(const PrimeContext& ctx);

// Best proper GAP found inside R by seeded randomized hill-climbing over
// (base, steps); a labeled lower bound. rank 1 delegates to max_ap_in_r.
GapDescriptor search_gap_in_r(const PrimeContext& ctx, int rank, u64 budget, u64 seed);

struct DoublingStats {
    u64 card_a = 0;
    u64 card_a_plus_a = 0;
    double k_plus = 0.0; // |A+A| / |A|
    struct Row {
        int n = 0, m = 0;
        u64 size = 0;   // |nA - mA|
        double rhs = 0; // K^(n+m) |A|
        bool pass = false;
    };
    std::vector<Row> rows;
};

DoublingStats doubling_stats(const FpSet& a, const std::vector<std::pair<int, int>>& pairs);

struct MultInclusion {
    u64 a_star = 0;
    FpSet w;                    // already normalized: [d] * w lands in A - A
    double bound_target = 0.0;  // |A| / K^(3d-3)
};

// Samples anchor tuples b in A^d and keeps the largest
// W(b) = {a1 in A : b_j + j (a1 - b_1) in A for j = 2..d}; the returned set
// is W(b) - b_1 and the inclusion [d] W <= A - A is re-verified exactly.
MultInclusion mult_inclusion_search(const FpSet& a, int d, u64 trials, u64 seed);

// d = 2 exact mode: full bucket count of a2 - 2 a1 over A^2; the argmax
// bucket gives the optimal W for this map, with |W| >= |A|/K^3 by
// pigeonhole over |A - 2A|.
MultInclusion mult_inclusion_exact2(const FpSet& a);

struct CapInvResult {
    u64 max_value = 0;
    u64 lambda = 0; // smallest argmax
};

// max over lambda != 0 of |B cap lambda B^-1| with B = A^+_S, via the
// product representation counts of B.
CapInvResult as_cap_inv(const FpSet& a, const std::vector<u64>& shifts);

// E+(A^x_S) against |A|^2|B|^2/p + |B|^(3/2) |A|^(3/2) |S|^(-1/2);
// ratio-only, the implied constant is unknown.
BoundCheck energy_of_times_set(const FpSet& a, const std::vector<u64>& shifts);

// |R^+ over (H+X) u (H+X)^-1| against sqrt(p) log p / |H|^c. Requires
// |X| >= log p and H+X inside R; violations raise HypothesisFailed naming
// the hypothesis.
BoundCheck r_plus_hx_inv(const PrimeContext& ctx, Interval H, const FpSet& X,
                         double c_exponent = 0.5);

struct RuzsaCover {
    FpSet x;
    bool check = false; // covering inclusion and |X| >= |R^+_[h]| / (2h)
};

// Greedy maximal X inside R^+_[h] with X + [0,h) direct, then exact
// verification of R^+_[h] inside ([0,h) - [0,h)) + X.
RuzsaCover ruzsa_cover(const PrimeContext& ctx, u64 h);

} // namespace rlab
