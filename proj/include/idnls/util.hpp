#ifndef IDNLS_UTIL_HPP
#define IDNLS_UTIL_HPP

#include <cmath>
#include <complex>
#include <string>

namespace idnls {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// sech that never overflows cosh for large arguments.
inline double sech(double x) {
    double ax = std::fabs(x);
    if (ax > 30.0) {
        double e = std::exp(-ax);
        return 2.0 * e / (1.0 + e * e);
    }
    return 1.0 / std::cosh(x);
}

inline double sqr(double x) { return x * x; }

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

// 17 significant digits: round-trip exact for doubles.
std::string fmt17(double x);

// Parse "a+bi" / "a-bi" / "a" / "bi" / "i" style complex literals.
cplx parse_complex(const std::string& s);

std::string format_complex(const cplx& z);

}  // namespace idnls

#endif
