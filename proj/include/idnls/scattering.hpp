#ifndef IDNLS_SCATTERING_HPP
#define IDNLS_SCATTERING_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "idnls/lattice.hpp"
#include "idnls/quartet.hpp"

namespace idnls {

// 2x2 complex matrix, row major.
struct Mat2 {
    cplx m00, m01, m10, m11;
    cplx det() const { return m00 * m11 - m01 * m10; }
};

inline std::array<cplx, 2> apply(const Mat2& m, const std::array<cplx, 2>& v) {
    return {m.m00 * v[0] + m.m01 * v[1], m.m10 * v[0] + m.m11 * v[1]};
}

// One step of the scattering problem X_{n+1} = M_n X_n,
// M_n = [[z, -conj(R_n)], [R_n, 1/z]]. det = 1 + |R_n|^2.
Mat2 transfer_matrix(const cplx& z, const cplx& Rn);

enum class JostKind { phi, psi, phi_star, psi_star };

// Eigenfunction of the scattering problem on a windowed state; values are
// stored for n = n_min-1 .. n_max+2 so the boundary normalization is visible.
struct JostSolution {
    cplx z;
    JostKind kind;
    int n_first = 0;
    std::vector<std::array<cplx, 2>> values;  // index n -> column vector

    const std::array<cplx, 2>& at(int n) const {
        return values[static_cast<size_t>(n - n_first)];
    }
    int n_last() const { return n_first + static_cast<int>(values.size()) - 1; }
};

JostSolution jost(JostKind kind, const cplx& z, const LatticeState& state);

// Scattering coefficients read off at n = n_max + 1 (exact for windowed data):
// a = z^{-n} phi_n^(1), b = z^{n} phi_n^(2). The propagation is rescaled by
// z^{-1} per site so |z|^n never overflows; b is only finite-range safe on
// |z| = 1, a is valid for any z != 0.
std::pair<cplx, cplx> compute_ab(const cplx& z, const LatticeState& state);

struct ScatteringSample {
    double theta = 0.0;  // z = exp(i theta)
    cplx a, b;
    cplx r() const { return b / a; }
};

struct ScatteringData {
    std::vector<ScatteringSample> samples;  // theta_k = 2 pi k / N
    std::vector<EigenQuartet> quartets;     // sorted by ascending velocity
    double c_inf = 1.0;
    double base_time = 0.0;
};

struct ScatterOptions {
    double eps0 = 1e-3;             // inner margin of the eigenvalue annulus
    double r_max = 8.0;             // outer search radius
    double assumption_floor = 1e-6; // min |a| allowed on the circle
    double d = 0.05;                // velocity separation parameter
};

// Full forward map: circle samples + eigenvalue quartets + norming constants.
// N must be a power of two >= 64. Throws AssumptionViolated when the generic
// assumptions fail (zero of a on the circle, double zero, velocity collision).
ScatteringData scatter(const LatticeState& state, int N,
                       const ScatterOptions& opts = ScatterOptions{});

// All zeros of a(z) in the half annulus 1+eps0 <= |z| <= r_max, Re z > 0 or
// (Re z = 0, Im z > 0), refined to |a| <= 1e-12.
std::vector<cplx> find_eigenvalues(const LatticeState& state,
                                   const ScatterOptions& opts = ScatterOptions{});

// da/dz by a Cauchy integral on a radius-1e-3 circle, 32 trapezoid nodes.
cplx a_derivative(const cplx& z0, const LatticeState& state);

// C = b(z0) / a'(z0) at an eigenvalue z0. Throws DegenerateEigenvalue when
// |a'| < 1e-10 (double zero).
cplx norming_constant(const cplx& z0, const LatticeState& state);

// Pushes the data forward to time t: r gains exp(i dt (z - 1/z)^2) on the
// circle (a is time independent, b = r a), each C gains exp(2 i omega dt).
ScatteringData evolve_scattering(const ScatteringData& data, double t);

// JSON persistence:
// {n_samples, base_time, c_inf, samples:[{theta,a_re,a_im,b_re,b_im}],
//  quartets:[{z_re,z_im,C_re,C_im}]}
void write_scattering_json(const ScatteringData& data, const std::string& path);
ScatteringData read_scattering_json(const std::string& path);

}  // namespace idnls

#endif
