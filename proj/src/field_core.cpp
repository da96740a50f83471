#include "residue_lab/field_core.hpp"

#include "residue_lab/error.hpp"

namespace rlab {

namespace {

u64 validate_modulus(u64 p) {
    if (p == 2) fail(Err::TooSmall, "PrimeContext: p = 2 has no non-residues");
    if (!is_prime_u64(p)) fail(Err::NotPrime, "PrimeContext: " + std::to_string(p) + " is not prime");
    if (p > (u64(1) << 31)) fail(Err::TooLarge, "PrimeContext: table cap is p <= 2^31");
    return p;
}

} // namespace

PrimeContext::PrimeContext(u64 p) : p_(validate_modulus(p)), residues_(p), nonresidues_(p) {
    chi_.assign(p, -1);
    chi_[0] = 0;
    for (u64 x = 1; x <= (p - 1) / 2; ++x) {
        chi_[mul_mod(x, x, p)] = 1;
    }
    for (u64 x = 1; x < p; ++x) {
        if (chi_[x] == 1)
            residues_.add(x);
        else
            nonresidues_.add(x);
    }
}

} // namespace rlab
