#ifndef IDNLS_LATTICE_HPP
#define IDNLS_LATTICE_HPP

#include <complex>
#include <string>
#include <vector>

#include "idnls/util.hpp"

namespace idnls {

// Finite window of the doubly infinite lattice. Sites outside the window are
// implicitly zero, which is only faithful while the tails stay tiny.
struct LatticeState {
    int n_min = 0;
    std::vector<cplx> amplitudes;  // R_n for n = n_min .. n_max
    double time = 0.0;

    int n_max() const { return n_min + static_cast<int>(amplitudes.size()) - 1; }
    int size() const { return static_cast<int>(amplitudes.size()); }

    cplx at(int n) const {
        int i = n - n_min;
        if (i < 0 || i >= size()) return cplx(0.0, 0.0);
        return amplitudes[static_cast<size_t>(i)];
    }
    cplx& operator[](int n) { return amplitudes[static_cast<size_t>(n - n_min)]; }
};

struct IntegratorConfig {
    double dt = 1e-3;
    double tail_tol = 1e-10;
    int tail_guard = 5;
    std::vector<double> snapshot_times;  // nonnegative, increasing
};

struct IntegrationStats {
    double max_rel_drift = 0.0;  // of the conserved product, relative to t=0
    long steps = 0;
};

// Throws std::invalid_argument when the window is malformed (length < 3,
// non-finite amplitudes) and TailOverflow when the guard sites exceed tail_tol.
void validate(const LatticeState& state, double tail_tol = 1e-10, int tail_guard = 5);

// dR_n/dt = i[(R_{n+1} - 2 R_n + R_{n-1}) + |R_n|^2 (R_{n+1} + R_{n-1})],
// zero Dirichlet outside the window.
std::vector<cplx> rhs(const LatticeState& state);

// One classical RK4 step of size cfg.dt (window unchanged).
LatticeState step(const LatticeState& state, const IntegratorConfig& cfg);

// Repeated stepping; the step size is shortened on the last sub-step so each
// snapshot time is hit exactly. Snapshot times must be >= state.time.
std::vector<LatticeState> integrate(const LatticeState& state, const IntegratorConfig& cfg,
                                    IntegrationStats* stats = nullptr);

// c_{-infinity} = prod_n (1 + |R_n|^2) over the window; >= 1.
double conserved_product(const LatticeState& state);

// Weighted l^1 norm: sum (1+|n|)^p |R_n|.
double norm_l1p(const LatticeState& state, int p);

// CSV persistence: header "# t=<real> n_min=<int>", then rows "n,re,im"
// at 17 significant digits.
void write_lattice_csv(const LatticeState& state, const std::string& path);
LatticeState read_lattice_csv(const std::string& path);

}  // namespace idnls

#endif
