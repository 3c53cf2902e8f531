#ifndef IDNLS_ASYMPTOTICS_HPP
#define IDNLS_ASYMPTOTICS_HPP

#include <complex>
#include <string>
#include <vector>

#include "idnls/quartet.hpp"
#include "idnls/scattering.hpp"

namespace idnls {

// Saddle geometry of the phase phi(z; n, t) on |z| = 1 for a ray xi = n/t,
// |xi| < 2. The two integration arcs are the counterclockwise minor arcs
// S1 -> S2 and S3 -> S4, with S3 = -S1, S4 = -S2.
struct PhaseGeometry {
    double xi = 0.0;
    cplx A;
    cplx S1, S2, S3, S4;
    double theta1 = 0.0;   // arg S1
    double arc_len = 0.0;  // counterclockwise angular length of each arc
};

PhaseGeometry saddle_points(double xi);  // throws OutOfRange unless |xi| < 2

// Re phi(z_j) = alpha_j t (tw_j - n/t).
double phase_re_at_eigenvalue(const EigenQuartet& q, int n, double t);

// Trigonometric interpolation of the reflection coefficient from the
// equispaced circle samples (barycentric, spectrally accurate).
class ReflectionInterp {
  public:
    explicit ReflectionInterp(const ScatteringData& data);
    cplx r(double theta) const;
    double log1p_r2(double theta) const;  // log(1 + |r|^2)
    bool reflectionless(double tol = 1e-14) const;

  private:
    std::vector<double> theta_;
    std::vector<cplx> r_;
};

// The scalar factor
//   delta(z) = exp( -(1/2 pi i) [int_{S1}^{S2} + int_{S3}^{S4}]
//                   log(1+|r(tau)|^2) / (tau - z) dtau )
// along the arcs of `geom`. Valid for any z off the closed arcs; throws
// ArcCollision when z is within 1e-8 of an arc.
cplx delta_eval(const cplx& z, const PhaseGeometry& geom, const ReflectionInterp& refl);

inline cplx delta_eval(const cplx& z, const PhaseGeometry& geom, const ScatteringData& data) {
    return delta_eval(z, geom, ReflectionInterp(data));
}

// Blaschke-type product over the faster solitons S:
//   T(z) = prod_{k in S} z_k^2 (z^2 - conj(z_k)^{-2}) / (z^2 - z_k^2),
// T = 1 when S is empty. Throws PoleHit when z^2 hits some z_k^2.
cplx blaschke_T(const cplx& z, const std::vector<EigenQuartet>& quartets,
                const std::vector<int>& S_set);
cplx T_infinity(const std::vector<EigenQuartet>& quartets, const std::vector<int>& S_set);

enum class RegionKind {
    InteriorSoliton,
    InteriorSolitonless,
    EdgeSoliton,
    EdgeSolitonless,
    ExteriorSoliton,
    ExteriorSolitonless,
};

struct RegionTag {
    RegionKind kind;
    int s = -1;  // quartet index for the soliton tags
};

std::string region_name(const RegionTag& tag);

struct PredictParams {
    double d = 0.05;
    double V0 = 0.2;
    double M = 2.0;
    double t_min = 5.0;
};

// Region membership per the ray n/t (reflection n -> -n built in).
// Throws AmbiguousRegion when the configured interior and edge bands overlap
// at this point, and OutOfRange for t < t_min.
RegionTag classify_region(int n, double t, const ScatteringData& data,
                          const PredictParams& p = PredictParams{});

// Phase-shift data entering the modified norming constant of soliton s at
// the point (n, t).
struct PhaseFactors {
    std::vector<int> S_set;  // quartet indices with tw_k > n/t + d
    double delta0 = 1.0;
    cplx delta_zs = 1.0;
    cplx T_zs = 1.0;
    cplx p_s = 1.0;      // T(0) T(inf), unit modulus
    cplx modified_C;     // the BS argument of the relevant theorem
};

PhaseFactors phase_factors(int s, int n, double t, const ScatteringData& data,
                           double d, const RegionTag& region);

struct Prediction {
    RegionTag tag{RegionKind::InteriorSolitonless, -1};
    bool has_value = false;
    cplx value;              // soliton regions: BS with the modified constant
    double envelope = 0.0;   // solitonless regions: decay envelope for |R_n|
    double order = 0.0;      // error exponent (-1/2, -1/3, or +inf)
};

Prediction predict(int n, double t, const ScatteringData& data,
                   const PredictParams& p = PredictParams{});

}  // namespace idnls

#endif
