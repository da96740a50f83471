#pragma once

#include "residue_lab/fpset.hpp"
#include "residue_lab/number.hpp"

#include <cstdint>
#include <vector>

namespace rlab {

// One odd prime p with its sieved Legendre table and the residue /
// non-residue sets. Immutable after construction; share freely across
// threads. Construction is single-threaded.
class PrimeContext {
public:
    explicit PrimeContext(u64 p);

    u64 p() const { return p_; }
    int chi(u64 x) const { return chi_[x]; } // x must satisfy 0 <= x < p
    const FpSet& residues() const { return residues_; }
    const FpSet& nonresidues() const { return nonresidues_; }
    const std::vector<int8_t>& chi_table() const { return chi_; }

private:
    u64 p_;
    std::vector<int8_t> chi_;
    FpSet residues_;
    FpSet nonresidues_;
};

inline PrimeContext build_context(u64 p) { return PrimeContext(p); }

inline int legendre(u64 x, const PrimeContext& ctx) { return ctx.chi(x); }

} // namespace rlab
