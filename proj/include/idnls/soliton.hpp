#ifndef IDNLS_SOLITON_HPP
#define IDNLS_SOLITON_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "idnls/lattice.hpp"
#include "idnls/quartet.hpp"

namespace idnls {

// Bright 1-soliton
//   BS(n,t;z1,C) = (C/|C|) exp(-i[2 b (n+1) - 2 w t]) sinh(2a) sech[2a(n+1) - 2 v t - theta],
//   z1 = exp(a + i b), a > 0,
//   v = -sinh(2a) sin(2b),  w = cosh(2a) cos(2b) - 1,  theta = log|C| - log sinh(2a).
cplx bright_soliton(int n, double t, const cplx& z1, const cplx& C);

// d/dt of the closed form above (exact, not a finite difference).
cplx bright_soliton_dt(int n, double t, const cplx& z1, const cplx& C);

// Reflectionless multi-soliton prescription: quartets carry C at t = 0.
struct SolitonSpec {
    std::vector<EigenQuartet> quartets;
    int n_min = 0;
    int n_max = 0;
    double time = 0.0;
};

// Solves the reflectionless pole problem site by site and reconstructs R_n(t).
// Throws SingularPoleSystem when the residue system is too ill-conditioned.
LatticeState synthesize_reflectionless(const SolitonSpec& spec);

// Three-site potential R_1 = 1, R_0 / R_2 chosen so the analytic scattering
// coefficient is a(z) = z^{-4} (z^2 - x1)(z^2 - x2).
struct ThreeSiteSpec {
    cplx x1, x2;  // prescribed zeros of the quadratic
    cplx R0, R2;  // derived amplitudes
};

std::pair<LatticeState, std::function<cplx(cplx)>> build_three_site(const cplx& x1,
                                                                    const cplx& x2);

ThreeSiteSpec three_site_spec(const cplx& x1, const cplx& x2);

// JSON persistence of a SolitonSpec:
// {quartets:[{z_re,z_im,C_re,C_im}], t, n_min, n_max}
void write_soliton_spec(const SolitonSpec& spec, const std::string& path);
SolitonSpec read_soliton_spec(const std::string& path);

}  // namespace idnls

#endif
