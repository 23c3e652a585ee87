#include "censtail/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace censtail {

double kaplan_meier_survival(const OrderedSample& sample, double x)
{
    const auto& z = sample.z();
    const auto& d = sample.delta();
    const std::size_t n = z.size();
    double s = 1.0;
    // 1-based i: factor ((n-i)/(n-i+1))^delta
    for (std::size_t i = 1; i <= n && z[i - 1] <= x; ++i) {
        if (d[i - 1])
            s *= static_cast<double>(n - i) / static_cast<double>(n - i + 1);
    }
    return s;
}

double nelson_aalen_survival(const OrderedSample& sample, double z)
{
    const auto& zs = sample.z();
    const auto& d = sample.delta();
    const std::size_t n = zs.size();
    double h = 0.0;
    for (std::size_t i = 1; i <= n && zs[i - 1] < z; ++i)
        h += d[i - 1] / static_cast<double>(n - i + 1);
    return std::exp(-h);
}

double na_tail_ratio(const OrderedSample& sample, std::size_t k, std::size_t i)
{
    check_window(sample, k);
    if (i < 1 || i > k)
        throw std::out_of_range("na_tail_ratio: i outside [1, k]");
    double h = 0.0;
    for (std::size_t j = i + 1; j <= k; ++j)
        h += sample.delta_top(j) / static_cast<double>(j);
    return std::exp(-h);
}

std::vector<double> mdpd_weights(const OrderedSample& sample, std::size_t k)
{
    check_window(sample, k);
    std::vector<double> a(k);
    double h = 0.0;   // sum_{j=i+1..k} delta_j / j
    for (std::size_t i = k; i >= 1; --i) {
        const int d = sample.delta_top(i);
        a[i - 1] = d ? std::exp(-h) / static_cast<double>(i) : 0.0;
        h += d / static_cast<double>(i);
    }
    return a;
}

Subdistributions empirical_subdistributions(const OrderedSample& sample, double x)
{
    const auto& z = sample.z();
    const auto& d = sample.delta();
    const auto end = std::upper_bound(z.begin(), z.end(), x);
    const std::size_t m = static_cast<std::size_t>(end - z.begin());
    std::size_t m1 = 0;
    for (std::size_t i = 0; i < m; ++i)
        m1 += static_cast<std::size_t>(d[i]);
    const double n = static_cast<double>(z.size());
    return {static_cast<double>(m) / n, static_cast<double>(m1) / n};
}

}  // namespace censtail
