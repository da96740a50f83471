#include "residue_lab/structure.hpp"

#include "residue_lab/error.hpp"
#include "residue_lab/energy_fourier.hpp"
#include "residue_lab/shifted.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rlab {

FpSet gap_elements(const GapDescriptor& g, u64 p) {
    if (g.nominal_size() > 10000000) fail(Err::TooLargeGap, "gap_elements: cap is 10^7 elements");
    for (const GapLeg& l : g.legs) {
        if (l.length < 1) fail(Err::PreconditionViolated, "gap_elements: leg lengths start at 1");
        if (l.step % p == 0) fail(Err::PreconditionViolated, "gap_elements: zero step");
    }
    FpSet out(p);
    std::vector<u64> idx(g.legs.size(), 0);
    while (true) {
        u64 v = g.base % p;
        for (size_t j = 0; j < g.legs.size(); ++j)
            v = add_mod(v, mul_mod(g.legs[j].step % p, idx[j], p), p);
        out.add(v);
        size_t j = 0;
        for (; j < g.legs.size(); ++j) {
            if (++idx[j] < g.legs[j].length) break;
            idx[j] = 0;
        }
        if (j == g.legs.size()) break;
    }
    return out;
}

bool is_proper(const GapDescriptor& g, u64 p) {
    return u128(gap_elements(g, p).size()) == g.nominal_size();
}

std::string format_gap(const GapDescriptor& g, u64 p) {
    std::ostringstream os;
    os << "p=" << p << "; base=" << g.base << "; legs=";
    for (size_t j = 0; j < g.legs.size(); ++j) {
        if (j) os << ";";
        os << "(" << g.legs[j].step << "," << g.legs[j].length << ")";
    }
    return os.str();
}

GapDescriptor parse_gap(const std::string& line, u64& p_out) {
    GapDescriptor g;
    u64 base = 0, p = 0;
    const char* s = line.c_str();
    int consumed = 0;
    if (std::sscanf(s, " p=%llu ; base=%llu ; legs=%n", (unsigned long long*)&p,
                    (unsigned long long*)&base, &consumed) != 2 ||
        consumed == 0)
        fail(Err::ConfigError, "parse_gap: malformed descriptor");
    g.base = base;
    s += consumed;
    while (*s) {
        u64 step = 0, len = 0;
        int used = 0;
        if (std::sscanf(s, " (%llu,%llu)%n", (unsigned long long*)&step, (unsigned long long*)&len,
                        &used) != 2)
            fail(Err::ConfigError, "parse_gap: malformed leg");
        g.legs.push_back({step, len});
        s += used;
        if (*s == ';') ++s;
    }
    if (g.legs.empty()) fail(Err::ConfigError, "parse_gap: no legs");
    p_out = p;
    return g;
}

ApResult max_ap_in_r(const PrimeContext& ctx) {
    u64 p = ctx.p();
    u64 best_len = 0, base = 0, step = 1;
    for (const Run& r : runs(ctx.residues()).runs)
        if (r.length > best_len) {
            best_len = r.length;
            base = r.start;
            step = 1;
        }
    u64 best_n = 0, n_start = 0;
    for (const Run& r : runs(ctx.nonresidues()).runs)
        if (r.length > best_n) {
            best_n = r.length;
            n_start = r.start;
        }
    if (best_n > best_len) {
        u64 nu = 0;
        for (u64 x = 1; x < p; ++x)
            if (ctx.chi(x) == -1) {
                nu = x;
                break;
            }
        best_len = best_n;
        base = mul_mod(nu, n_start, p);
        step = nu;
    }
    // The witness must be inside R; cheap to confirm.
    u64 v = base;
    for (u64 i = 0; i < best_len; ++i) {
        if (ctx.chi(v) != 1) throw std::logic_error("max_ap_in_r: witness left R");
        v = add_mod(v, step, p);
    }
    return {best_len, step, base};
}

namespace {

// One hill-climbing pass: grow random legs while every new layer stays in R
// and keeps the element set proper.
GapDescriptor climb(const PrimeContext& ctx, int rank, std::mt19937_64& rng) {
    u64 p = ctx.p();
    auto residues = ctx.residues().elements();
    GapDescriptor g;
    g.base = residues[rng() % residues.size()];
    for (int j = 0; j < rank; ++j) {
        u64 step;
        bool fresh;
        do {
            step = 1 + rng() % (p - 1);
            fresh = true;
            for (const GapLeg& l : g.legs) fresh = fresh && l.step != step;
        } while (!fresh);
        g.legs.push_back({step, 1});
    }

    FpSet members(p);
    members.add(g.base);

    std::vector<u64> order(rank);
    for (int j = 0; j < rank; ++j) order[j] = j;
    bool improved = true;
    while (improved) {
        improved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (u64 j : order) {
            // Candidate layer x_j = length_j over the other legs' boxes.
            std::vector<u64> layer;
            bool ok = true;
            std::vector<u64> idx(g.legs.size(), 0);
            u64 offset = mul_mod(g.legs[j].step % p, g.legs[j].length, p);
            while (ok) {
                u64 v = add_mod(g.base % p, offset, p);
                for (size_t i = 0; i < g.legs.size(); ++i)
                    if (i != j) v = add_mod(v, mul_mod(g.legs[i].step % p, idx[i], p), p);
                if (ctx.chi(v) != 1 || members.contains(v)) {
                    ok = false;
                    break;
                }
                layer.push_back(v);
                size_t i = 0;
                for (; i < g.legs.size(); ++i) {
                    if (i == j) continue;
                    if (++idx[i] < g.legs[i].length) break;
                    idx[i] = 0;
                }
                if (i == g.legs.size()) break;
            }
            if (!ok) continue;
            u64 before = members.size();
            for (u64 v : layer) members.add(v);
            if (members.size() != before + layer.size()) {
                // duplicate inside the layer itself: rebuild and reject
                members = gap_elements(g, p);
                continue;
            }
            ++g.legs[j].length;
            improved = true;
        }
    }
    return g;
}

} // namespace

GapDescriptor search_gap_in_r(const PrimeContext& ctx, int rank, u64 budget, u64 seed) {
    if (rank < 1 || rank > 3) fail(Err::PreconditionViolated, "search_gap_in_r: rank in {1,2,3}");
    u64 p = ctx.p();
    if (rank == 1) {
        ApResult ap = max_ap_in_r(ctx);
        return {ap.base, {{ap.step, ap.length}}};
    }
    GapDescriptor best;
    u128 best_size = 0;
    for (u64 t = 0; t < budget; ++t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        GapDescriptor g = climb(ctx, rank, rng);
        if (g.nominal_size() > best_size) {
            best_size = g.nominal_size();
            best = g;
        }
    }
    if (best.legs.empty()) {
        // zero budget: fall back to a single residue
        best.base = ctx.residues().elements().front();
        best.legs.assign(static_cast<size_t>(rank), GapLeg{1, 1});
        for (int j = 1; j < rank; ++j) best.legs[static_cast<size_t>(j)].step = u64(j) + 1;
    }
    if (!gap_elements(best, p).subset_of(ctx.residues()) || !is_proper(best, p))
        throw std::logic_error("search_gap_in_r: best candidate failed re-verification");
    return best;
}

DoublingStats doubling_stats(const FpSet& a, const std::vector<std::pair<int, int>>& pairs) {
    if (a.empty()) fail(Err::EmptyA, "doubling_stats: empty set");
    DoublingStats out;
    out.card_a = a.size();
    int max_iter = 1;
    for (auto [n, m] : pairs) {
        if (n < 1 || m < 1) fail(Err::PreconditionViolated, "doubling_stats: n, m >= 1");
        max_iter = std::max({max_iter, n, m});
    }
    std::vector<FpSet> iterated{a};
    for (int i = 1; i < max_iter + 1; ++i) {
        if (static_cast<int>(iterated.size()) > max_iter) break;
        iterated.push_back(sumset(iterated.back(), a));
    }
    out.card_a_plus_a = iterated.size() > 1 ? iterated[1].size() : sumset(a, a).size();
    out.k_plus = static_cast<double>(out.card_a_plus_a) / static_cast<double>(out.card_a);

    for (auto [n, m] : pairs) {
        DoublingStats::Row row;
        row.n = n;
        row.m = m;
        row.size = difference_set(iterated[static_cast<size_t>(n - 1)],
                                  iterated[static_cast<size_t>(m - 1)])
                       .size();
        row.rhs = std::pow(out.k_plus, n + m) * static_cast<double>(out.card_a);
        if (n + m <= 4) {
            // exact: |nA-mA| |A|^(n+m-1) <= |A+A|^(n+m)
            u128 lhs = row.size;
            for (int i = 0; i < n + m - 1; ++i) lhs *= out.card_a;
            u128 rhs = 1;
            for (int i = 0; i < n + m; ++i) rhs *= out.card_a_plus_a;
            row.pass = lhs <= rhs;
        } else {
            row.pass = static_cast<double>(row.size) <= row.rhs * (1.0 + 1e-12);
        }
        out.rows.push_back(row);
    }
    return out;
}

namespace {

void verify_mult_inclusion(const FpSet& a, const FpSet& w, int d) {
    u64 p = a.modulus();
    FpSet diff = difference_set(a, a);
    bool ok = true;
    w.for_each([&](u64 x) {
        for (int j = 1; j <= d; ++j)
            if (!diff.contains(mul_mod(static_cast<u64>(j), x, p))) ok = false;
    });
    if (!ok) throw std::logic_error("mult_inclusion: [d] W escaped A - A");
}

double mult_inclusion_bound(const FpSet& a, int d) {
    double k = static_cast<double>(sumset(a, a).size()) / static_cast<double>(a.size());
    return static_cast<double>(a.size()) / std::pow(k, 3.0 * (d - 1));
}

} // namespace

MultInclusion mult_inclusion_search(const FpSet& a, int d, u64 trials, u64 seed) {
    if (a.empty()) fail(Err::EmptyA, "mult_inclusion_search: empty set");
    if (d < 2) fail(Err::PreconditionViolated, "mult_inclusion_search: d >= 2");
    u64 p = a.modulus();
    auto elems = a.elements();

    std::vector<u64> best_w;
    u64 best_b1 = elems.front();
    for (u64 t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        std::vector<u64> b(static_cast<size_t>(d));
        for (auto& v : b) v = elems[rng() % elems.size()];
        std::vector<u64> w;
        for (u64 a1 : elems) {
            u64 delta = sub_mod(a1, b[0], p);
            bool ok = true;
            for (int j = 2; j <= d && ok; ++j)
                ok = a.contains(
                    add_mod(b[static_cast<size_t>(j - 1)], mul_mod(u64(j), delta, p), p));
            if (ok) w.push_back(a1);
        }
        if (w.size() > best_w.size()) {
            best_w = std::move(w);
            best_b1 = b[0];
        }
    }

    MultInclusion out{best_b1, FpSet(p), mult_inclusion_bound(a, d)};
    for (u64 a1 : best_w) out.w.add(sub_mod(a1, best_b1, p));
    verify_mult_inclusion(a, out.w, d);
    return out;
}

MultInclusion mult_inclusion_exact2(const FpSet& a) {
    if (a.empty()) fail(Err::EmptyA, "mult_inclusion_exact2: empty set");
    u64 p = a.modulus();
    auto elems = a.elements();

    std::vector<u64> buckets(p, 0);
    for (u64 a1 : elems) {
        u64 two_a1 = add_mod(a1, a1, p);
        for (u64 a2 : elems) ++buckets[sub_mod(a2, two_a1, p)];
    }
    u64 v_star = 0;
    for (u64 v = 1; v < p; ++v)
        if (buckets[v] > buckets[v_star]) v_star = v;

    u64 b1 = 0;
    bool found = false;
    std::vector<u64> w;
    for (u64 a1 : elems) {
        if (a.contains(add_mod(add_mod(a1, a1, p), v_star, p))) {
            if (!found) {
                b1 = a1;
                found = true;
            }
            w.push_back(a1);
        }
    }
    MultInclusion out{b1, FpSet(p), mult_inclusion_bound(a, 2)};
    for (u64 a1 : w) out.w.add(sub_mod(a1, b1, p));
    verify_mult_inclusion(a, out.w, 2);
    return out;
}

CapInvResult as_cap_inv(const FpSet& a, const std::vector<u64>& shifts) {
    if (shifts.empty()) fail(Err::PreconditionViolated, "as_cap_inv: shift set is empty");
    u64 p = a.modulus();
    FpSet b = shifted_intersection_add(a, shifts);
    if (b.empty()) return {0, 0};
    RepCounts rc = rep_counts(b, b, BinOp::Mul);
    CapInvResult out{0, 0};
    for (u64 lambda = 1; lambda < p; ++lambda)
        if (rc.counts[lambda] > out.max_value) {
            out.max_value = rc.counts[lambda];
            out.lambda = lambda;
        }
    return out;
}

BoundCheck energy_of_times_set(const FpSet& a, const std::vector<u64>& shifts) {
    u64 p = a.modulus();
    std::vector<u64> distinct;
    for (u64 s : shifts) {
        u64 sm = s % p;
        if (sm == 0) fail(Err::ZeroShift, "energy_of_times_set: zero shift");
        if (std::find(distinct.begin(), distinct.end(), sm) == distinct.end())
            distinct.push_back(sm);
    }
    FpSet b = shifted_intersection_mul(a, distinct);
    u128 energy = b.empty() ? 0 : additive_energy(b, b).value;
    double ca = static_cast<double>(a.size());
    double cb = static_cast<double>(b.size());
    double rhs = ca * ca * cb * cb / static_cast<double>(p) +
                 std::pow(cb, 1.5) * std::pow(ca, 1.5) / std::sqrt(static_cast<double>(distinct.size()));
    return make_check(p, "energy_times_set", energy, rhs, std::nullopt, "times-set-energy",
                      "A=" + std::to_string(a.size()) + ";S=" + std::to_string(distinct.size()) +
                          ";B=" + std::to_string(b.size()));
}

BoundCheck r_plus_hx_inv(const PrimeContext& ctx, Interval H, const FpSet& X, double c_exponent) {
    u64 p = ctx.p();
    double L = std::log2(static_cast<double>(p));
    if (static_cast<double>(X.size()) < L)
        fail(Err::HypothesisFailed, "r_plus_hx_inv: |X| >= log p violated");
    FpSet h_set = interval_set(p, H.start, H.length);
    FpSet hx = sumset(h_set, X);
    if (!hx.subset_of(ctx.residues()))
        fail(Err::HypothesisFailed, "r_plus_hx_inv: H+X inside R violated");
    FpSet shift_set = set_union(hx, invert_set(hx));
    u64 value = shifted_intersection_add(ctx.residues(), shift_set.elements()).size();
    double rhs = std::sqrt(static_cast<double>(p)) * L /
                 std::pow(static_cast<double>(H.length), c_exponent);
    return make_check(p, "rplus_hx_inv", value, rhs, std::nullopt, "rplus-hx-bound",
                      "H=" + std::to_string(H.length) + ";X=" + std::to_string(X.size()) +
                          ";c=" + std::to_string(c_exponent));
}

RuzsaCover ruzsa_cover(const PrimeContext& ctx, u64 h) {
    u64 p = ctx.p();
    if (h < 1) fail(Err::BadWindow, "ruzsa_cover: h >= 1");
    std::vector<u64> shifts;
    for (u64 s = 1; s <= h && s < p; ++s) shifts.push_back(s);
    FpSet b = shifted_intersection_add(ctx.residues(), shifts);

    RuzsaCover out{FpSet(p), true};
    auto members = b.elements();
    std::vector<u64> chosen;
    for (u64 y : members) {
        if (chosen.empty()) {
            chosen.push_back(y);
            continue;
        }
        bool clear = y - chosen.back() >= h && chosen.front() + p - y >= h;
        if (clear) chosen.push_back(y);
    }
    for (u64 y : chosen) out.x.add(y);

    // Covering: every member of B lies within distance < h of a chosen
    // element (both directions, cyclically).
    for (u64 y : members) {
        auto it = std::upper_bound(chosen.begin(), chosen.end(), y);
        u64 succ = it == chosen.end() ? chosen.front() + p : *it;
        u64 pred = it == chosen.begin() ? chosen.back() : *(it - 1);
        u64 up = succ - y;
        u64 down = y >= pred ? y - pred : y + p - pred;
        if (std::min(up, down) >= h) {
            out.check = false;
            break;
        }
    }
    if (!chosen.empty() && u128(out.x.size()) * 2 * h < b.size()) out.check = false;
    if (b.empty()) out.check = true;
    return out;
}

} // namespace rlab
