#ifndef IDNLS_HARNESS_HPP
#define IDNLS_HARNESS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idnls/asymptotics.hpp"
#include "idnls/lattice.hpp"
#include "idnls/scattering.hpp"
#include "idnls/soliton.hpp"

namespace idnls {

struct GaussianInit {
    double amplitude = 0.3;
    double width = 2.0;
    double chirp = 0.0;
};

struct BsPlusNoiseInit {
    EigenQuartet quartet;
    double noise_amp = 0.05;
    std::uint64_t seed = 0;
};

struct InitialData {
    // one of: "quartet_spec", "lattice_state", "gaussian", "bs_plus_noise"
    std::string type;
    std::string path;  // for the file-backed kinds
    GaussianInit gaussian;
    BsPlusNoiseInit bs_noise;
};

struct ExperimentConfig {
    InitialData initial_data;
    int window_min = -100;
    int window_max = 100;
    IntegratorConfig integrator;
    int scattering_N = 512;
    std::vector<double> rays;
    std::vector<double> times;
    PredictParams params;
    double solitonless_halfwidth = 5;  // sites averaged for envelope errors
    std::string out_dir = "out";
    std::uint64_t seed = 0;
};

ExperimentConfig read_experiment_config(const std::string& path);

// R_n = amplitude exp(-(n/width)^2 + i chirp n^2).
LatticeState make_gaussian_state(const GaussianInit& g, int n_min, int n_max);

// Bright soliton plus complex white noise under the soliton's sech envelope
// (deterministic for a fixed seed).
LatticeState make_bs_plus_noise_state(const BsPlusNoiseInit& b, int n_min, int n_max);

LatticeState build_initial_state(const ExperimentConfig& cfg);

struct ComparisonRecord {
    int n;
    double t;
    double ray;
    RegionTag tag;
    cplx sim;
    bool has_pred_value = false;
    cplx pred;
    double envelope = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

struct ExperimentResult {
    ScatteringData initial_scattering;
    std::vector<ComparisonRecord> records;
    IntegrationStats stats;
};

// simulate -> scatter -> predict -> compare; writes snapshots, scattering
// JSON, comparison CSV and a summary JSON into cfg.out_dir.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct PeakMeasurement {
    double t = 0.0;
    double center = 0.0;        // sub-grid peak location in n
    double amplitude = 0.0;
    double carrier_phase = 0.0; // arg R at the site nearest to center
    double velocity_fit = 0.0;  // filled by track_peak_series
};

// Sub-grid peak near `hint` (within +-10 sites) by 3-point parabolic
// interpolation of |R_n|^2. Throws NoPeak when no interior local max exists.
PeakMeasurement track_peak(const LatticeState& snapshot, double hint);

// Follows one peak through a snapshot series, unwraps the carrier phase and
// fits the velocity.
std::vector<PeakMeasurement> track_peak_series(const std::vector<LatticeState>& snaps,
                                               double hint0);

struct PowerLawFit {
    double exponent = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log(err) against log(t); needs >= 5 positive points.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct PhaseShift {
    double center_shift = 0.0;
    double carrier_shift = 0.0;  // radians, wrapped to (-pi, pi]
};

// Extrapolates the pre- and post-collision linear fits of center(t) and of
// the site-corrected carrier phase to `common_time` and differences them.
PhaseShift measure_phase_shift(const std::vector<PeakMeasurement>& pre,
                               const std::vector<PeakMeasurement>& post,
                               const EigenQuartet& q, double common_time);

// The (center, carrier) displacement caused by multiplying the norming
// constant by `factor` in the closed-form soliton.
PhaseShift predicted_soliton_shift(const EigenQuartet& q, const cplx& factor);

void write_comparison_csv(const std::vector<ComparisonRecord>& records,
                          const std::string& path);
void write_prediction_csv_row(std::ostream& os, int n, double t, const Prediction& p);

}  // namespace idnls

#endif
