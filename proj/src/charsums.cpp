#include "residue_lab/charsums.hpp"

#include "residue_lab/error.hpp"
#include "residue_lab/gaps_packing.hpp"

#include <algorithm>

namespace rlab {

i64 char_sum_interval(const PrimeContext& ctx, u64 s, u64 h) {
    u64 p = ctx.p();
    if (h < 1 || h > p) fail(Err::BadWindow, "char_sum_interval: need 1 <= h <= p");
    i64 sum = 0;
    u64 x = add_mod(s % p, 1, p);
    for (u64 i = 0; i < h; ++i) {
        sum += ctx.chi(x);
        x = x + 1 == p ? 0 : x + 1;
    }
    return sum;
}

namespace {

inline int quad_chi(const PrimeContext& ctx, u64 x) {
    u64 p = ctx.p();
    u64 next = x + 1 == p ? 0 : x + 1;
    return ctx.chi(mul_mod(x, next, p));
}

} // namespace

double quadratic_charsum_rhs(u64 h, u64 d_star) {
    return static_cast<double>(h) * (1.0 - 0.5 / static_cast<double>(d_star)) + 4.0;
}

BoundCheck char_sum_quadratic(const PrimeContext& ctx, u64 a, u64 s, u64 h, u64 d_star) {
    u64 p = ctx.p();
    if (h < 1 || h > p) fail(Err::BadWindow, "char_sum_quadratic: need 1 <= h <= p");
    i64 sum = 0;
    u64 x = add_mod(add_mod(s % p, a % p, p), 1, p); // (x + a) with x = s+1
    for (u64 i = 0; i < h; ++i) {
        sum += quad_chi(ctx, x);
        x = x + 1 == p ? 0 : x + 1;
    }
    u64 value = static_cast<u64>(sum < 0 ? -sum : sum);
    double rhs = quadratic_charsum_rhs(h, d_star);
    return make_check(p, "quadratic_charsum", value, rhs, static_cast<double>(value) <= rhs,
                      "quadratic-charsum-bound",
                      "a=" + std::to_string(a) + ";s=" + std::to_string(s) +
                          ";h=" + std::to_string(h));
}

BoundCheck char_sum_quadratic(const PrimeContext& ctx, u64 a, u64 s, u64 h) {
    return char_sum_quadratic(ctx, a, s, h, gap_stats(ctx).d_star);
}

SplittingReport split_window(const PrimeContext& ctx, u64 s, u64 h, SplitVariant variant) {
    u64 p = ctx.p();
    if (h < 1 || h > p) fail(Err::BadWindow, "split_window: need 1 <= h <= p");

    SplittingReport out;
    out.variant = variant;

    std::vector<u64> w(h);
    std::vector<int> cls(h);
    u64 x = add_mod(s % p, 1, p);
    for (u64 i = 0; i < h; ++i) {
        w[i] = x;
        cls[i] = ctx.chi(x);
        if (cls[i] == 0) out.contains_zero = true;
        x = x + 1 == p ? 0 : x + 1;
    }
    for (u64 i = 0; i + 1 < h; ++i) out.chi_sum += ctx.chi(mul_mod(w[i], w[i + 1], p));

    // Maximal pure runs of the class sequence; chi = 0 elements are their
    // own single-element runs.
    struct Seg {
        u64 begin, len;
        int cls;
    };
    std::vector<Seg> segs;
    for (u64 i = 0; i < h;) {
        u64 j = i + 1;
        while (j < h && cls[j] == cls[i] && cls[i] != 0) ++j;
        segs.push_back({i, j - i, cls[i]});
        i = j;
    }

    auto piece_kind = [](int c) { return c == 1 ? 'R' : c == -1 ? 'N' : 'Z'; };

    if (variant == SplitVariant::First) {
        for (const Seg& g : segs) {
            out.pieces.push_back({w[g.begin], g.len, piece_kind(g.cls)});
            if (g.cls == 1) ++out.n_R;
            if (g.cls == -1) ++out.n_N;
        }
        return out;
    }

    // Second variant: runs of length >= 2 stay pure; consecutive leftover
    // runs merge into alternating pieces.
    size_t i = 0;
    while (i < segs.size()) {
        const Seg& g = segs[i];
        if (g.cls != 0 && g.len >= 2) {
            out.pieces.push_back({w[g.begin], g.len, piece_kind(g.cls)});
            if (g.cls == 1) ++out.n_R;
            if (g.cls == -1) ++out.n_N;
            ++i;
            continue;
        }
        u64 begin = g.begin, len = 0;
        while (i < segs.size() && !(segs[i].cls != 0 && segs[i].len >= 2)) {
            len += segs[i].len;
            ++i;
        }
        out.pieces.push_back({w[begin], len, 'I'});
        ++out.s_alt;
    }
    return out;
}

QuadraticRun max_quadratic_run(const PrimeContext& ctx, u64 a) {
    u64 p = ctx.p();
    a %= p;
    FpSet good(p);
    for (u64 x = 0; x < p; ++x) {
        if (quad_chi(ctx, add_mod(x, a, p)) == 1) good.add(x);
    }
    QuadraticRun out;
    for (const Run& r : runs(good).runs) {
        if (r.length > out.h) {
            out.h = r.length;
            out.s = sub_mod(r.start, 1, p); // window is s+1 .. s+h
        }
    }
    return out;
}

} // namespace rlab
