#include "idnls/quartet.hpp"

#include <cmath>
#include <stdexcept>

namespace idnls {

double tw_velocity(const cplx& z) {
    double alpha = std::log(std::abs(z));
    if (!(alpha > 0.0)) throw std::invalid_argument("tw_velocity needs |z| > 1");
    double beta = std::arg(z);
    return -std::sinh(2.0 * alpha) * std::sin(2.0 * beta) / alpha;
}

EigenQuartet make_quartet(cplx z, cplx C) {
    if (std::abs(z) <= 1.0) {
        // handed the inner mirror conj(z)^{-1}; lift it back outside
        z = 1.0 / std::conj(z);
        C = std::conj(C) * z * z;  // inverse of C* = conj(z)^{-2} conj(C)
    }
    double eps = 1e-12 * std::abs(z);
    if (z.real() < -eps || (std::abs(z.real()) <= eps && z.imag() < 0.0)) z = -z;
    EigenQuartet q;
    q.z = z;
    q.alpha = std::log(std::abs(z));
    q.beta = std::arg(z);
    q.C = C;
    cplx d = z - 1.0 / z;
    q.omega = 0.5 * d * d;
    q.tw = tw_velocity(z);
    return q;
}

}  // namespace idnls
