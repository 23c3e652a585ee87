#include "censtail/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "censtail/empirical.hpp"
#include "censtail/root_finding.hpp"

namespace censtail {

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::Hill: return "Hill";
    case Method::EFG: return "EFG";
    case Method::Worms: return "Worms";
    case Method::MNS: return "MNS";
    case Method::MDPD: return "MDPD";
    }
    return "?";
}

double hill_gamma(const OrderedSample& sample, std::size_t k)
{
    const auto ex = top_log_excesses(sample, k);
    double s = 0.0;
    for (const auto& e : ex)
        s += e.l;
    if (s == 0.0)
        throw estimation_error("zero Hill estimate");
    return s / static_cast<double>(k);
}

double censored_proportion(const OrderedSample& sample, std::size_t k)
{
    check_window(sample, k);
    std::size_t m = 0;
    for (std::size_t i = 1; i <= k; ++i)
        m += static_cast<std::size_t>(sample.delta_top(i));
    return static_cast<double>(m) / static_cast<double>(k);
}

double efg_estimator(const OrderedSample& sample, std::size_t k)
{
    const double p = censored_proportion(sample, k);
    if (p == 0.0)
        throw estimation_error("all top observations censored");
    return hill_gamma(sample, k) / p;
}

double worms_estimator(const OrderedSample& sample, std::size_t k)
{
    check_window(sample, k);
    const auto& z = sample.z();
    const std::size_t n = z.size();

    // KM survival just after each order statistic, then resolved to the
    // last member of its tie group so that km[m] = KM(z[m]) with <=.
    std::vector<double> km(n);
    double s = 1.0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (sample.delta()[i - 1])
            s *= static_cast<double>(n - i) / static_cast<double>(n - i + 1);
        km[i - 1] = s;
    }
    for (std::size_t m = n - 1; m-- > 0;) {
        if (z[m] == z[m + 1])
            km[m] = km[m + 1];
    }

    const double denom = km[n - k - 1];
    if (!(denom > 0.0))
        throw estimation_error("KM threshold mass exhausted");
    double g = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
        // Z_{n-i:n} sits at 0-based position n-i-1, Z_{n-i+1:n} at n-i.
        g += (km[n - i - 1] / denom) * std::log(z[n - i] / z[n - i - 1]);
    }
    return g;
}

double mns_estimator(const OrderedSample& sample, std::size_t k)
{
    const auto a = mdpd_weights(sample, k);
    const auto ex = top_log_excesses(sample, k);
    double g = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        g += a[i] * ex[i].l;
    return g;
}

MdpdWindow::MdpdWindow(const OrderedSample& sample, TailConfig config)
    : k_(config.k), alpha_(config.alpha)
{
    if (!(config.alpha >= 0.0) || !std::isfinite(config.alpha))
        throw std::invalid_argument("alpha must be nonnegative");
    const auto a = mdpd_weights(sample, config.k);
    const auto ex = top_log_excesses(sample, config.k);
    for (std::size_t i = 0; i < config.k; ++i) {
        if (a[i] > 0.0) {
            a_.push_back(a[i]);
            l_.push_back(ex[i].l);
        }
    }
}

double MdpdWindow::residual(double g) const
{
    if (!(g > 0.0))
        throw std::invalid_argument("gamma1 must be positive");
    const double al = alpha_;
    const double c = al * (1.0 + 1.0 / g);
    double s = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i)
        s += a_[i] * (g - l_[i]) * std::exp(-c * l_[i]);
    const double d = 1.0 + al + al * g;
    return s - al * g * (g + 1.0) / (d * d);
}

double MdpdWindow::objective(double g) const
{
    if (!(g > 0.0))
        throw std::invalid_argument("gamma1 must be positive");
    if (!(alpha_ > 0.0))
        throw std::invalid_argument("objective requires alpha > 0");
    const double al = alpha_;
    const double ga = std::pow(g, -al);
    const double model = ga / (1.0 + al + al * g);
    // l_gamma(r)^alpha = gamma^-alpha * r^{-alpha(1+1/gamma)}
    const double c = al * (1.0 + 1.0 / g);
    double s = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i)
        s += a_[i] * std::exp(-c * l_[i]);
    return model - (1.0 + 1.0 / al) * ga * s;
}

double mdpd_residual(double gamma1, const OrderedSample& sample, TailConfig config)
{
    return MdpdWindow(sample, config).residual(gamma1);
}

double mdpd_objective(double gamma1, const OrderedSample& sample, TailConfig config)
{
    return MdpdWindow(sample, config).objective(gamma1);
}

namespace {

struct Crossing {
    double root;
    double fx;
    int iterations;
    double lo;
    double hi;
    bool upward;
};

}  // namespace

EstimateResult mdpd_estimate(const OrderedSample& sample, TailConfig config,
                             const SolverOptions& options)
{
    EstimateResult res;
    res.method = config.alpha == 0.0 ? Method::MNS : Method::MDPD;
    res.alpha = config.alpha;
    res.k = config.k;
    if (config.alpha == 0.0) {
        res.gamma1_hat = mns_estimator(sample, config.k);
        return res;
    }

    if (!(options.domain_lo > 0.0) || !(options.domain_hi > options.domain_lo))
        throw std::invalid_argument("invalid search domain");
    if (options.grid_points < 2)
        throw std::invalid_argument("grid_points must be at least 2");

    const MdpdWindow w(sample, config);
    if (w.empty())
        throw estimation_error("no root exists");

    const int m = options.grid_points;
    std::vector<GridPoint> grid(static_cast<std::size_t>(m));
    const double lr = std::log(options.domain_hi / options.domain_lo);
    for (int j = 0; j < m; ++j) {
        const double g = j == m - 1 ? options.domain_hi
                                    : options.domain_lo * std::exp(lr * j / (m - 1));
        grid[static_cast<std::size_t>(j)] = {g, w.residual(g)};
    }

    auto rho = [&](double g) { return w.residual(g); };
    std::vector<Crossing> found;
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const auto& a = grid[j];
        const auto& b = grid[j + 1];
        if (a.rho == 0.0) {
            if (j == 0)
                continue;
            const bool up = grid[j - 1].rho < 0.0 || b.rho > 0.0;
            found.push_back({a.gamma1, 0.0, 0, grid[j - 1].gamma1, b.gamma1, up});
            continue;
        }
        if (b.rho == 0.0 || (a.rho > 0.0) == (b.rho > 0.0))
            continue;
        const auto r = brent_root(rho, a.gamma1, b.gamma1, a.rho, b.rho, options.tol_abs,
                                  options.max_iter);
        if (!r.converged)
            continue;
        found.push_back({r.x, r.fx, r.iterations, a.gamma1, b.gamma1, a.rho < 0.0});
    }
    if (found.empty())
        throw no_root_error("no root in bracket", std::move(grid));

    // Prefer crossings from below (local minima of the objective), and
    // among them the one nearest the alpha = 0 solution.
    const double anchor = mns_estimator(sample, config.k);
    const bool any_up = std::any_of(found.begin(), found.end(),
                                    [](const Crossing& c) { return c.upward; });
    const Crossing* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& c : found) {
        if (any_up && !c.upward)
            continue;
        const double d = std::fabs(c.root - anchor);
        if (d < best_d) {
            best_d = d;
            best = &c;
        }
    }

    res.gamma1_hat = best->root;
    res.diagnostics.residual = best->fx;
    res.diagnostics.iterations = best->iterations;
    res.diagnostics.bracket_lo = best->lo;
    res.diagnostics.bracket_hi = best->hi;
    for (const auto& c : found)
        res.diagnostics.all_roots.push_back(c.root);
    return res;
}

}  // namespace censtail
