#include "censtail/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace censtail {

OrderedSample order_sample(std::span<const CensoredObservation> observations)
{
    if (observations.empty())
        throw std::invalid_argument("empty sample");
    for (const auto& o : observations) {
        if (!(o.z > 0.0) || !std::isfinite(o.z) || (o.delta != 0 && o.delta != 1))
            throw std::invalid_argument("invalid observation");
    }

    std::vector<std::size_t> idx(observations.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return observations[a].z < observations[b].z;
    });

    OrderedSample s;
    s.z_.reserve(idx.size());
    s.delta_.reserve(idx.size());
    for (std::size_t i : idx) {
        s.z_.push_back(observations[i].z);
        s.delta_.push_back(observations[i].delta);
    }
    return s;
}

OrderedSample OrderedSample::scaled(double c) const
{
    if (!(c > 0.0))
        throw std::invalid_argument("scale factor must be positive");
    OrderedSample s = *this;
    for (double& v : s.z_)
        v *= c;
    return s;
}

ModelParams ModelParams::from_p(double gamma1, double p, double eta, double tau1)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("p must lie in (0, 1)");
    return ModelParams{gamma1, p * gamma1 / (1.0 - p), eta, tau1};
}

void check_window(const OrderedSample& sample, std::size_t k)
{
    if (k < 1 || k + 1 > sample.size())
        throw std::out_of_range("k = " + std::to_string(k) + " outside [1, n-1] for n = " +
                                std::to_string(sample.size()));
}

std::vector<LogExcess> top_log_excesses(const OrderedSample& sample, std::size_t k)
{
    check_window(sample, k);
    const double u = sample.threshold(k);
    if (!(u > 0.0))
        throw std::domain_error("zero threshold");
    std::vector<LogExcess> out(k);
    for (std::size_t i = 1; i <= k; ++i)
        out[i - 1] = {std::log(sample.z_top(i) / u), sample.delta_top(i)};
    return out;
}

}  // namespace censtail
