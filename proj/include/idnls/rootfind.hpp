#ifndef IDNLS_ROOTFIND_HPP
#define IDNLS_ROOTFIND_HPP

#include <complex>
#include <functional>
#include <vector>

#include "idnls/util.hpp"

namespace idnls {

using CplxFn = std::function<cplx(const cplx&)>;

struct AnnulusSearchOptions {
    int theta_cells = 48;       // initial grid resolution in arg z
    int rho_cells = 16;         // initial grid resolution in log|z|
    double theta_shift = 0.0;   // rotate the grid to dodge roots on cell edges
    double newton_cell = 0.05;  // subdivide to this size before Newton
    double double_zero_cell = 1e-5;  // winding >= 2 below this => not simple
    double refine_tol = 1e-12;  // |f| target for Newton
    int max_newton_iter = 60;
};

// Winding number of f along the counterclockwise boundary of the annulus
// sector r in [r_lo, r_hi], arg in [t_lo, t_hi] (adaptive phase tracking).
// Throws NumericFailure if f passes too close to zero on the boundary.
int sector_winding(const CplxFn& f, double r_lo, double r_hi, double t_lo, double t_hi);

struct AnnulusZeros {
    std::vector<cplx> zeros;   // refined simple zeros
    bool double_zero = false;  // an unresolvable multiple zero was isolated
    cplx double_zero_at;       // approximate location when double_zero
};

// All zeros of the analytic function f in r_lo < |z| < r_hi by argument
// principle counting on a quadtree in (log|z|, arg z), then Newton with the
// supplied derivative. Retries with a rotated grid when a root sits on a
// cell edge.
AnnulusZeros annulus_zeros(const CplxFn& f, const CplxFn& fprime, double r_lo,
                           double r_hi, const AnnulusSearchOptions& opts = {});

}  // namespace idnls

#endif
