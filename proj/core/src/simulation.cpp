#include "censtail/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "censtail/distributions.hpp"
#include "censtail/parallel.hpp"
#include "censtail/random.hpp"

namespace censtail {

std::vector<CensoredObservation> sample_contaminated_censored(
    std::size_t n, const ModelParams& model, const ContaminationSpec& cont, std::uint64_t seed,
    std::uint64_t replicate, std::vector<LatentDraw>* latent)
{
    if (!(cont.epsilon >= 0.0 && cont.epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    RandomStream rng(seed, replicate);
    std::vector<CensoredObservation> out(n);
    if (latent)
        latent->assign(n, {});
    for (std::size_t j = 0; j < n; ++j) {
        // Three uniforms per observation, always consumed, so the stream
        // layout does not depend on epsilon.
        const double uc = rng.uniform();
        const double ux = rng.uniform();
        const double ucens = rng.uniform();
        const bool contaminated = uc < cont.epsilon;
        const double x = burr_quantile(ux, contaminated ? cont.theta1 : model.gamma1, model.eta);
        const double c = frechet_quantile(ucens, model.gamma2);
        out[j] = {std::min(x, c), x <= c ? 1 : 0};
        if (latent)
            (*latent)[j] = {x, c, contaminated};
    }
    return out;
}

void validate(const SweepSpec& s)
{
    if (s.n < 10)
        throw std::invalid_argument("sweep: n must be at least 10");
    if (s.replicates < 1)
        throw std::invalid_argument("sweep: replicates must be at least 1");
    if (!(s.contamination.epsilon >= 0.0 && s.contamination.epsilon < 1.0))
        throw std::invalid_argument("sweep: epsilon must lie in [0, 1)");
    if (s.alphas.empty() || s.k_grid.empty())
        throw std::invalid_argument("sweep: empty alpha list or k grid");
    for (double a : s.alphas)
        if (!(a >= 0.0))
            throw std::invalid_argument("sweep: alphas must be nonnegative");
    for (std::size_t k : s.k_grid)
        if (k < 1 || k >= s.n)
            throw std::invalid_argument("sweep: every k must satisfy 1 <= k < n");
    if (!(s.model.gamma1 > 0.0 && s.model.gamma2 > 0.0 && s.model.eta > 0.0))
        throw std::invalid_argument("sweep: model parameters must be positive");
}

std::vector<double> sweep_estimates(const SweepSpec& spec)
{
    validate(spec);
    const std::size_t nk = spec.k_grid.size();
    const std::size_t na = spec.alphas.size();
    const std::size_t cells = nk * na;
    std::vector<double> est(spec.replicates * cells, std::numeric_limits<double>::quiet_NaN());

    parallel_for(spec.replicates, spec.threads, [&](std::size_t r) {
        const auto obs = sample_contaminated_censored(spec.n, spec.model, spec.contamination,
                                                      spec.seed, r);
        const auto sample = order_sample(obs);
        double* row = est.data() + r * cells;
        for (std::size_t ik = 0; ik < nk; ++ik) {
            for (std::size_t ia = 0; ia < na; ++ia) {
                try {
                    const auto e = mdpd_estimate(sample, {spec.k_grid[ik], spec.alphas[ia]},
                                                 spec.solver);
                    row[ik * na + ia] = e.gamma1_hat;
                } catch (const estimation_error&) {
                    // counted as a failure
                }
            }
        }
    });
    return est;
}

SweepResult run_sweep(const SweepSpec& spec)
{
    const auto est = sweep_estimates(spec);
    const std::size_t nk = spec.k_grid.size();
    const std::size_t na = spec.alphas.size();
    const std::size_t cells = nk * na;
    const double truth = spec.model.gamma1;

    SweepResult res;
    for (std::size_t ik = 0; ik < nk; ++ik) {
        for (std::size_t ia = 0; ia < na; ++ia) {
            const std::size_t c = ik * na + ia;
            double sum = 0.0, sq = 0.0;
            std::size_t ok = 0;
            for (std::size_t r = 0; r < spec.replicates; ++r) {
                const double v = est[r * cells + c];
                if (std::isnan(v))
                    continue;
                sum += v - truth;
                sq += (v - truth) * (v - truth);
                ++ok;
            }
            SweepRow row{spec.k_grid[ik], spec.alphas[ia], 0.0, 0.0, spec.replicates - ok};
            if (ok == 0) {
                row.abs_bias = row.mse = std::numeric_limits<double>::quiet_NaN();
            } else {
                row.abs_bias = std::fabs(sum / static_cast<double>(ok));
                row.mse = sq / static_cast<double>(ok);
            }
            res.rows.push_back(row);
        }
    }
    return res;
}

}  // namespace censtail
