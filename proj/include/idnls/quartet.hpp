#ifndef IDNLS_QUARTET_HPP
#define IDNLS_QUARTET_HPP

#include <complex>

#include "idnls/util.hpp"

namespace idnls {

// Soliton velocity of the eigenvalue z = exp(alpha + i beta), |z| > 1.
double tw_velocity(const cplx& z);

// Canonical representative of one eigenvalue quartet {±z, ±conj(z)^{-1}}
// together with its norming constant. The representative has Re z > 0, or
// Re z = 0 and Im z > 0. Norming constants of the lower half of the quartet
// are never stored; they follow from C* = conj(z)^{-2} conj(C).
struct EigenQuartet {
    cplx z;       // |z| > 1, canonical half-plane
    double alpha; // log|z| > 0
    double beta;  // principal arg z
    cplx C;       // norming constant at the data's base time
    cplx omega;   // (z - 1/z)^2 / 2
    double tw;    // velocity

    // Norming constant of the mirror eigenvalue conj(z)^{-1}.
    cplx C_star() const { return std::conj(C) / (std::conj(z) * std::conj(z)); }
};

// Builds the quartet from any member of {±z, ±conj(z)^{-1}} with |z| > 1
// (the representative is canonicalized; C is invariant under z -> -z).
EigenQuartet make_quartet(cplx z, cplx C);

}  // namespace idnls

#endif
