#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "censtail/estimators.hpp"
#include "censtail/sample.hpp"

namespace censtail {

struct ContaminationSpec {
    double epsilon = 0.0;
    double theta1 = 0.6;   // tail index of the contaminating Burr component
};

// Latent draws kept alongside the observation (used by tests).
struct LatentDraw {
    double x = 0.0;
    double c = 0.0;
    bool contaminated = false;
};

// X ~ (1-eps) Burr(gamma1, eta) + eps Burr(theta1, eta) by component
// selection, C ~ Frechet(gamma2), Z = min(X, C), delta = 1{X <= C}.
// The replicate index selects an independent random stream.
std::vector<CensoredObservation> sample_contaminated_censored(
    std::size_t n, const ModelParams& model, const ContaminationSpec& contamination,
    std::uint64_t seed, std::uint64_t replicate = 0, std::vector<LatentDraw>* latent = nullptr);

struct SweepSpec {
    std::size_t n = 1000;
    std::size_t replicates = 200;
    ModelParams model;
    ContaminationSpec contamination;
    std::vector<double> alphas{0.0, 0.1, 0.3, 0.5};
    std::vector<std::size_t> k_grid;
    std::uint64_t seed = 1;
    SolverOptions solver;
    int threads = 0;
};

struct SweepRow {
    std::size_t k = 0;
    double alpha = 0.0;
    double abs_bias = 0.0;
    double mse = 0.0;
    std::size_t n_failures = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;   // k-major, alphas in the order given
};

void validate(const SweepSpec& spec);

// Raw estimates, replicate-major: [r][k index][alpha index], NaN on failure.
std::vector<double> sweep_estimates(const SweepSpec& spec);

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace censtail
