#include "idnls/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "idnls/errors.hpp"

namespace idnls {

void validate(const LatticeState& state, double tail_tol, int tail_guard) {
    if (state.size() < 3) throw std::invalid_argument("lattice window shorter than 3 sites");
    for (const cplx& a : state.amplitudes)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("non-finite lattice amplitude");
    int g = std::min(tail_guard, state.size() / 2);
    double worst = 0.0;
    for (int i = 0; i < g; ++i) {
        worst = std::max(worst, std::abs(state.amplitudes[static_cast<size_t>(i)]));
        worst = std::max(worst,
                         std::abs(state.amplitudes[static_cast<size_t>(state.size() - 1 - i)]));
    }
    if (worst > tail_tol)
        throw TailOverflow("tail amplitude " + fmt17(worst) + " exceeds tolerance " +
                           fmt17(tail_tol) + " at t=" + fmt17(state.time));
}

namespace {

// Core evaluation with zero Dirichlet neighbors, writing into `out`.
void rhs_into(const std::vector<cplx>& R, std::vector<cplx>& out) {
    const size_t N = R.size();
    out.resize(N);
    const cplx I(0.0, 1.0);
    for (size_t k = 0; k < N; ++k) {
        cplx left = (k > 0) ? R[k - 1] : cplx(0.0);
        cplx right = (k + 1 < N) ? R[k + 1] : cplx(0.0);
        double mod2 = std::norm(R[k]);
        out[k] = I * ((right - 2.0 * R[k] + left) + mod2 * (right + left));
    }
}

struct RK4Scratch {
    std::vector<cplx> k1, k2, k3, k4, tmp;
};

void rk4_step_inplace(std::vector<cplx>& R, double dt, RK4Scratch& s) {
    const size_t N = R.size();
    rhs_into(R, s.k1);
    s.tmp.resize(N);
    for (size_t i = 0; i < N; ++i) s.tmp[i] = R[i] + 0.5 * dt * s.k1[i];
    rhs_into(s.tmp, s.k2);
    for (size_t i = 0; i < N; ++i) s.tmp[i] = R[i] + 0.5 * dt * s.k2[i];
    rhs_into(s.tmp, s.k3);
    for (size_t i = 0; i < N; ++i) s.tmp[i] = R[i] + dt * s.k3[i];
    rhs_into(s.tmp, s.k4);
    for (size_t i = 0; i < N; ++i)
        R[i] += (dt / 6.0) * (s.k1[i] + 2.0 * s.k2[i] + 2.0 * s.k3[i] + s.k4[i]);
}

void check_tail(const LatticeState& st, const IntegratorConfig& cfg) {
    int g = std::min(cfg.tail_guard, st.size() / 2);
    for (int i = 0; i < g; ++i) {
        double lo = std::abs(st.amplitudes[static_cast<size_t>(i)]);
        double hi = std::abs(st.amplitudes[static_cast<size_t>(st.size() - 1 - i)]);
        if (lo > cfg.tail_tol || hi > cfg.tail_tol)
            throw TailOverflow("window too small: edge amplitude " +
                               fmt17(std::max(lo, hi)) + " at t=" + fmt17(st.time));
    }
}

}  // namespace

std::vector<cplx> rhs(const LatticeState& state) {
    std::vector<cplx> out;
    rhs_into(state.amplitudes, out);
    return out;
}

LatticeState step(const LatticeState& state, const IntegratorConfig& cfg) {
    LatticeState next = state;
    RK4Scratch scratch;
    rk4_step_inplace(next.amplitudes, cfg.dt, scratch);
    next.time = state.time + cfg.dt;
    check_tail(next, cfg);
    return next;
}

std::vector<LatticeState> integrate(const LatticeState& state, const IntegratorConfig& cfg,
                                    IntegrationStats* stats) {
    if (cfg.dt <= 0.0) throw std::invalid_argument("dt must be positive");
    for (size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
        if (cfg.snapshot_times[i] < state.time - 1e-12)
            throw std::invalid_argument("snapshot time precedes initial time");
        if (i > 0 && cfg.snapshot_times[i] <= cfg.snapshot_times[i - 1])
            throw std::invalid_argument("snapshot times must be increasing");
    }

    LatticeState cur = state;
    RK4Scratch scratch;
    IntegrationStats st;
    const double c0 = conserved_product(cur);
    std::vector<LatticeState> snaps;
    snaps.reserve(cfg.snapshot_times.size());

    for (double target : cfg.snapshot_times) {
        const double seg_start = cur.time;
        double span = target - seg_start;
        long full = static_cast<long>(std::floor(span / cfg.dt - 1e-12));
        if (full < 0) full = 0;
        for (long k = 0; k < full; ++k) {
            rk4_step_inplace(cur.amplitudes, cfg.dt, scratch);
            ++st.steps;
        }
        cur.time = seg_start + full * cfg.dt;
        double rem = target - cur.time;
        if (rem > 1e-14) {
            rk4_step_inplace(cur.amplitudes, rem, scratch);
            ++st.steps;
        }
        cur.time = target;
        check_tail(cur, cfg);
        double c = conserved_product(cur);
        st.max_rel_drift = std::max(st.max_rel_drift, std::abs(c - c0) / c0);
        snaps.push_back(cur);
    }
    if (stats) *stats = st;
    return snaps;
}

double conserved_product(const LatticeState& state) {
    double p = 1.0;
    for (const cplx& a : state.amplitudes) p *= 1.0 + std::norm(a);
    return p;
}

double norm_l1p(const LatticeState& state, int p) {
    if (p < 0) throw std::invalid_argument("p must be >= 0");
    double s = 0.0;
    for (int i = 0; i < state.size(); ++i) {
        int n = state.n_min + i;
        s += std::pow(1.0 + std::abs(n), p) * std::abs(state.amplitudes[static_cast<size_t>(i)]);
    }
    return s;
}

void write_lattice_csv(const LatticeState& state, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "# t=" << fmt17(state.time) << " n_min=" << state.n_min << "\n";
    for (int i = 0; i < state.size(); ++i) {
        const cplx& a = state.amplitudes[static_cast<size_t>(i)];
        os << (state.n_min + i) << "," << fmt17(a.real()) << "," << fmt17(a.imag()) << "\n";
    }
}

LatticeState read_lattice_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("empty lattice file " + path);
    LatticeState st;
    int n_min = 0;
    if (std::sscanf(header.c_str(), "# t=%lf n_min=%d", &st.time, &n_min) != 2)
        throw std::runtime_error("bad lattice header in " + path);
    st.n_min = n_min;
    std::string line;
    int expect = n_min;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        int n;
        double re, im;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf", &n, &re, &im) != 3)
            throw std::runtime_error("bad lattice row: " + line);
        if (n != expect) throw std::runtime_error("non-contiguous lattice rows in " + path);
        st.amplitudes.emplace_back(re, im);
        ++expect;
    }
    if (st.size() < 3) throw std::runtime_error("lattice file too short: " + path);
    return st;
}

}  // namespace idnls
