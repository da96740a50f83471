#pragma once

#include "residue_lab/bound_check.hpp"
#include "residue_lab/field_core.hpp"
#include "residue_lab/fpset.hpp"

#include <complex>
#include <string>
#include <vector>

namespace rlab {

enum class BinOp { Add, Sub, Mul, Div };

// counts[lambda] = number of (a, b) pairs with a op b = lambda. For Div,
// zero denominators follow the ratio_set policy: error unless dropped.
struct RepCounts {
    u64 p = 0;
    std::vector<u64> counts;
};

RepCounts rep_counts(const FpSet& a, const FpSet& b, BinOp op, bool drop_zero_denominator = false);
RepCounts rep_counts_serial(const FpSet& a, const FpSet& b, BinOp op,
                            bool drop_zero_denominator = false);

enum class EnergyKind { Additive, Multiplicative };

// Exact energy in 128-bit integer arithmetic; values reach |A|^2 |B|^2 and
// float drift would poison the ratio tables downstream.
struct EnergyReport {
    u128 value = 0;
    EnergyKind kind = EnergyKind::Additive;
    std::string sets;
    std::string method = "direct";
    u64 card_a = 0;
    u64 card_b = 0;
};

EnergyReport additive_energy(const FpSet& a, const FpSet& b, std::string sets_label = "");
EnergyReport multiplicative_energy(const FpSet& a, const FpSet& b, std::string sets_label = "");

// E+(A,B) |A +- B| >= |A|^2 |B|^2, compared in exact integers.
BoundCheck cs_energy_check(const FpSet& a, const FpSet& b, char sign);

// Direct O(p^2) transform over F_p: hat f(rho) = sum_g f(g) e(-2 pi i g rho / p).
// p is prime, so there is no fast power-of-two structure to exploit; the
// dense cap is p <= 10^4. dft distributes rows over threads and computes
// each row exactly like the serial reference.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& f);
std::vector<std::complex<double>> dft_serial(const std::vector<std::complex<double>>& f);

// Multiplicative-energy experiment: Q = primes in [h*/2, h*], A = S + [0,h),
// exact E^x(Q, A) against |Q|^2|A|^2/p + |Q||A| min{h*/log h*, log p/log h*}
// with the implied constant set to 1. Ratio is the payload; the pass flag
// uses the configurable slack constant.
BoundCheck energy_lemma_experiment(const PrimeContext& ctx, u64 h, u64 h_star, const FpSet& S,
                                   double pass_constant = 16.0);

} // namespace rlab
