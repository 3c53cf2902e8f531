#ifndef IDNLS_ERRORS_HPP
#define IDNLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idnls {

// Lattice window can no longer represent a rapidly decreasing sequence:
// amplitude leaked into the guard sites at the window edges.
struct TailOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z = 0 handed to the scattering problem (the transfer matrix has a 1/z entry).
struct ZeroSpectralParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which of the generic assumptions on the scattering data failed.
enum class AssumptionKind {
    ZeroOnCircle,       // a(z) vanishes on (or too close to) |z| = 1
    DoubleZero,         // an eigenvalue is not simple
    VelocityCollision,  // two eigenvalue velocities closer than the separation 2d
};

struct AssumptionViolated : std::runtime_error {
    AssumptionKind kind;
    AssumptionViolated(AssumptionKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

struct DegenerateEigenvalue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPoleSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroNormingConstant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArcCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleHit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguousRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoPeak : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root search / refinement gave up (should not happen on valid inputs).
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace idnls

#endif
