#include "residue_lab/energy_fourier.hpp"

#include "residue_lab/error.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlab {

namespace {

std::vector<u64> op_images(const FpSet& b, BinOp op, bool drop_zero_denominator, u64 p) {
    std::vector<u64> out;
    if (op == BinOp::Div && b.contains(0) && !drop_zero_denominator)
        fail(Err::ZeroDenominator, "rep_counts: 0 in denominator set");
    b.for_each([&](u64 y) {
        if (op == BinOp::Div) {
            if (y == 0) return;
            out.push_back(inverse_mod(y, p));
        } else {
            out.push_back(y);
        }
    });
    return out;
}

inline u64 apply_op(u64 x, u64 y, BinOp op, u64 p) {
    switch (op) {
    case BinOp::Add: return add_mod(x, y, p);
    case BinOp::Sub: return sub_mod(x, y, p);
    default: return mul_mod(x, y, p); // Mul, or Div with y pre-inverted
    }
}

} // namespace

RepCounts rep_counts_serial(const FpSet& a, const FpSet& b, BinOp op, bool drop_zero_denominator) {
    u64 p = a.modulus();
    RepCounts out{p, std::vector<u64>(p, 0)};
    auto ys = op_images(b, op, drop_zero_denominator, p);
    a.for_each([&](u64 x) {
        for (u64 y : ys) ++out.counts[apply_op(x, y, op, p)];
    });
    return out;
}

RepCounts rep_counts(const FpSet& a, const FpSet& b, BinOp op, bool drop_zero_denominator) {
    u64 p = a.modulus();
    RepCounts out{p, std::vector<u64>(p, 0)};
    auto ys = op_images(b, op, drop_zero_denominator, p);
    auto xs = a.elements();
#pragma omp parallel
    {
        std::vector<u64> local(p, 0);
#pragma omp for schedule(static) nowait
        for (i64 i = 0; i < static_cast<i64>(xs.size()); ++i) {
            u64 x = xs[static_cast<size_t>(i)];
            for (u64 y : ys) ++local[apply_op(x, y, op, p)];
        }
#pragma omp critical
        for (u64 v = 0; v < p; ++v) out.counts[v] += local[v];
    }
    return out;
}

namespace {

EnergyReport energy_from_counts(const RepCounts& rc, EnergyKind kind, std::string label, u64 ca,
                                u64 cb) {
    EnergyReport out;
    out.kind = kind;
    out.sets = std::move(label);
    out.card_a = ca;
    out.card_b = cb;
    u128 e = 0;
    for (u64 c : rc.counts) e += u128(c) * c;
    out.value = e;
    return out;
}

} // namespace

EnergyReport additive_energy(const FpSet& a, const FpSet& b, std::string sets_label) {
    return energy_from_counts(rep_counts(a, b, BinOp::Sub), EnergyKind::Additive,
                              std::move(sets_label), a.size(), b.size());
}

EnergyReport multiplicative_energy(const FpSet& a, const FpSet& b, std::string sets_label) {
    return energy_from_counts(rep_counts(a, b, BinOp::Mul), EnergyKind::Multiplicative,
                              std::move(sets_label), a.size(), b.size());
}

BoundCheck cs_energy_check(const FpSet& a, const FpSet& b, char sign) {
    u64 p = a.modulus();
    if (u128(a.size()) * b.size() > (u128(1) << 31))
        fail(Err::TooLarge, "cs_energy_check: set sizes beyond the exact 128-bit range");
    EnergyReport e = additive_energy(a, b);
    FpSet combined = sign == '+' ? sumset(a, b) : difference_set(a, b);
    u128 lhs = e.value * combined.size();
    u128 rhs_exact = u128(a.size()) * a.size() * b.size() * b.size();
    BoundCheck c = make_check(p, "energy_cs", lhs, static_cast<double>(static_cast<long double>(rhs_exact)),
                              lhs >= rhs_exact, "cauchy-schwarz-energy",
                              std::string("sign=") + sign);
    return c;
}

std::vector<std::complex<double>> dft_serial(const std::vector<std::complex<double>>& f) {
    u64 p = f.size();
    if (p > 10000) fail(Err::TooLarge, "dft: dense evaluation capped at p <= 10^4");
    std::vector<std::complex<double>> out(p);
    const double two_pi_over_p = 2.0 * M_PI / static_cast<double>(p);
    for (u64 rho = 0; rho < p; ++rho) {
        std::complex<double> acc = 0.0;
        for (u64 g = 0; g < p; ++g) {
            double angle = -two_pi_over_p * static_cast<double>(mul_mod(g, rho, p));
            acc += f[g] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[rho] = acc;
    }
    return out;
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& f) {
    u64 p = f.size();
    if (p > 10000) fail(Err::TooLarge, "dft: dense evaluation capped at p <= 10^4");
    std::vector<std::complex<double>> out(p);
    const double two_pi_over_p = 2.0 * M_PI / static_cast<double>(p);
#pragma omp parallel for schedule(static)
    for (i64 rho = 0; rho < static_cast<i64>(p); ++rho) {
        std::complex<double> acc = 0.0;
        for (u64 g = 0; g < p; ++g) {
            double angle = -two_pi_over_p * static_cast<double>(mul_mod(g, static_cast<u64>(rho), p));
            acc += f[g] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[static_cast<u64>(rho)] = acc;
    }
    return out;
}

BoundCheck energy_lemma_experiment(const PrimeContext& ctx, u64 h, u64 h_star, const FpSet& S,
                                   double pass_constant) {
    u64 p = ctx.p();
    if (h_star > h) fail(Err::PreconditionViolated, "energy_lemma_experiment: h_star <= h");
    if (u128(8) * h_star * h >= p)
        fail(Err::PreconditionViolated, "energy_lemma_experiment: 8 h_star h < p");
    FpSet window = interval_set(p, 0, h);
    if (!is_direct_sum(S, window))
        fail(Err::PreconditionViolated, "energy_lemma_experiment: S + [0,h) must be direct");

    FpSet q(p);
    for (u64 prime : primes_in_range((h_star + 1) / 2, h_star)) q.add(prime);
    FpSet a = sumset(S, window);

    u128 energy = q.empty() || a.empty() ? 0 : multiplicative_energy(q, a).value;
    double rhs = 0.0;
    if (!q.empty() && !a.empty()) {
        double qa = static_cast<double>(q.size()) * static_cast<double>(a.size());
        double lg_hstar = std::log2(static_cast<double>(h_star));
        double lg_p = std::log2(static_cast<double>(p));
        double divisor_term =
            std::min(static_cast<double>(h_star) / lg_hstar, lg_p / lg_hstar);
        rhs = qa * qa / static_cast<double>(p) + qa * divisor_term;
    }
    BoundCheck c = make_check(p, "mult_energy_QA", energy, rhs, std::nullopt, "prime-window-energy",
                              "h=" + std::to_string(h) + ";h_star=" + std::to_string(h_star) +
                                  ";S=" + std::to_string(S.size()) + ";Q=" + std::to_string(q.size()) +
                                  ";A=" + std::to_string(a.size()));
    c.pass = c.ratio <= pass_constant;
    return c;
}

} // namespace rlab
