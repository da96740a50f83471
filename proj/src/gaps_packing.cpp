#include "residue_lab/gaps_packing.hpp"

#include "residue_lab/error.hpp"

#include <algorithm>
#include <cmath>

namespace rlab {

GapStats gap_stats(const PrimeContext& ctx) {
    GapStats out;
    out.p = ctx.p();
    for (const Run& r : runs(ctx.residues()).runs) {
        out.maxrun_R = std::max(out.maxrun_R, r.length);
        ++out.run_histogram_R[r.length];
    }
    for (const Run& r : runs(ctx.nonresidues()).runs) {
        out.maxrun_N = std::max(out.maxrun_N, r.length);
        ++out.run_histogram_N[r.length];
    }
    out.d_star = std::max(out.maxrun_R, out.maxrun_N);
    return out;
}

namespace {

// window_len[x] = length of the membership run starting at x, capped at p.
std::vector<u64> run_lengths_from(const FpSet& target) {
    u64 p = target.modulus();
    std::vector<u64> len(p, 0);
    if (target.is_full()) {
        std::fill(len.begin(), len.end(), p);
        return len;
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (u64 i = p; i-- > 0;) {
            if (!target.contains(i)) {
                len[i] = 0;
            } else {
                u64 next = i + 1 == p ? 0 : i + 1;
                len[i] = std::min<u64>(len[next] + 1, p);
            }
        }
    }
    return len;
}

} // namespace

PackingResult s_of_h(const FpSet& target, u64 h, std::string target_name) {
    u64 p = target.modulus();
    if (h < 1 || h > p) fail(Err::BadWindow, "s_of_h: need 1 <= h <= p");

    PackingResult out{0, FpSet(p), std::move(target_name), true};
    if (target.is_full()) {
        u64 n = p / h;
        for (u64 i = 0; i < n; ++i) out.witness.add(i * h);
        out.value = n;
        return out;
    }

    std::vector<u64> len = run_lengths_from(target);
    u64 cut = 0;
    while (target.contains(cut)) ++cut;
    // Every feasible window avoids `cut`, so scan linearly from cut+1 and
    // take the earliest feasible start each time.
    u64 next_free = 0;
    for (u64 i = 1; i < p; ++i) {
        if (i < next_free) continue;
        u64 x = cut + i >= p ? cut + i - p : cut + i;
        if (len[x] >= h) {
            out.witness.add(x);
            ++out.value;
            next_free = i + h;
        }
    }
    return out;
}

namespace {

struct BranchAndBound {
    const std::vector<u64>& candidates;
    const FpSet& conflicts; // (A-A) \ {0}
    u64 p;
    std::vector<u64> current, best;

    void run() {
        current.clear();
        best.clear();
        descend(0);
    }

    void descend(size_t idx) {
        if (current.size() + (candidates.size() - idx) <= best.size()) return;
        if (idx == candidates.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        u64 x = candidates[idx];
        bool ok = true;
        for (u64 y : current) {
            if (conflicts.contains(sub_mod(x, y, p))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            current.push_back(x);
            descend(idx + 1);
            current.pop_back();
        }
        descend(idx + 1);
    }
};

} // namespace

PackingResult s_of_set(const FpSet& target, const FpSet& a, PackingMode mode,
                       std::string target_name) {
    u64 p = target.modulus();
    if (a.empty()) fail(Err::EmptyA, "s_of_set: pattern set is empty");

    auto pattern = a.elements();
    std::vector<u64> candidates;
    for (u64 x = 0; x < p; ++x) {
        bool ok = true;
        for (u64 y : pattern) {
            if (!target.contains(add_mod(x, y, p))) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.push_back(x);
    }

    FpSet conflicts = difference_set(a, a);
    conflicts.remove(0);

    PackingResult out{0, FpSet(p), std::move(target_name), mode == PackingMode::Exact};
    if (mode == PackingMode::Exact) {
        if (candidates.size() > 40)
            fail(Err::ExactTooLarge, "s_of_set: exact mode capped at |T| <= 40, got " +
                                         std::to_string(candidates.size()));
        BranchAndBound bb{candidates, conflicts, p, {}, {}};
        bb.run();
        for (u64 x : bb.best) out.witness.add(x);
        out.value = bb.best.size();
    } else {
        std::vector<u64> chosen;
        for (u64 x : candidates) {
            bool ok = true;
            for (u64 y : chosen) {
                if (conflicts.contains(sub_mod(x, y, p))) {
                    ok = false;
                    break;
                }
            }
            if (ok) chosen.push_back(x);
        }
        for (u64 x : chosen) out.witness.add(x);
        out.value = chosen.size();
    }
    return out;
}

LocalPacking local_s_of_h(const PrimeContext& ctx, Interval I, u64 h) {
    FpSet target = set_intersection(ctx.residues(), interval_set(ctx.p(), I.start, I.length));
    LocalPacking out{s_of_h(target, h, "R∩I"), false};
    double L = std::log2(static_cast<double>(ctx.p()));
    out.hypothesis_ok = 16.0 * static_cast<double>(I.length) * static_cast<double>(h) *
                            static_cast<double>(h) <
                        static_cast<double>(ctx.p()) * L * L;
    return out;
}

namespace {

// Minimal h so that every window s+1..s+h meets the pair-start set:
// one more than the largest cyclic gap between consecutive pair positions.
u64 coverage_from_pairs(const FpSet& cls, u64 p) {
    std::vector<u64> starts;
    cls.for_each([&](u64 x) {
        if (cls.contains(add_mod(x, 1, p))) starts.push_back(x);
    });
    if (starts.empty()) fail(Err::NoPair, "consecutive_pair_coverage: no consecutive pair");
    u64 maxgap = starts.front() + p - starts.back();
    for (size_t i = 1; i < starts.size(); ++i)
        maxgap = std::max(maxgap, starts[i] - starts[i - 1]);
    return maxgap + 1;
}

} // namespace

PairCoverage consecutive_pair_coverage(const PrimeContext& ctx) {
    if (ctx.p() < 7) fail(Err::PreconditionViolated, "consecutive_pair_coverage: need p >= 7");
    PairCoverage out;
    out.h_R = coverage_from_pairs(ctx.residues(), ctx.p());
    out.h_N = coverage_from_pairs(ctx.nonresidues(), ctx.p());
    out.h_min = std::max(out.h_R, out.h_N);
    return out;
}

double delta_p(u64 p, u64 h) {
    double L = std::log2(static_cast<double>(p));
    double hd = static_cast<double>(h);
    if (hd <= 2.0 * L) return 1.0;
    if (hd <= L * L) return hd / L;
    return L;
}

double delta_p_closed(u64 p, u64 h) {
    double L = std::log2(static_cast<double>(p));
    double hd = static_cast<double>(h);
    return std::min(hd / std::min(hd / 2.0, L), L);
}

bool cond_h(u64 p, u64 h, double C) {
    double L = std::log2(static_cast<double>(p));
    return static_cast<double>(h) >= 2.0 * L - 4.0 * std::log2(C * L) + 4.0;
}

double distribution_rhs(u64 p, u64 h, double C) {
    double L = std::log2(static_cast<double>(p));
    double hd = static_cast<double>(h);
    double c_star = hd <= 2.0 * L ? C : 1.0;
    double inner = std::log2(4.0 * hd / std::min(hd, 2.0 * L));
    return c_star * std::sqrt(static_cast<double>(p)) * L * L * inner * inner * delta_p(p, h) /
           (hd * hd);
}

} // namespace rlab
