#include "censtail/asymptotics.hpp"

#include <boost/math/distributions/normal.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <limits>
#include <stdexcept>
#include <vector>

#include "censtail/parallel.hpp"
#include "censtail/quadrature.hpp"
#include "censtail/random.hpp"

namespace censtail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be positive");
}

void require_variance_domain(double alpha, double gamma1, double gamma2)
{
    require_positive(alpha, "alpha");
    require_positive(gamma1, "gamma1");
    require_positive(gamma2, "gamma2");
    if (!(gamma2 > gamma1))
        throw std::domain_error("variance formula requires p > 1/2");
}

// phi(x) = C (A - B log x) x^{-e}
struct PhiCoef {
    double C, A, B, e;
    PhiCoef(double alpha, double g)
        : C(alpha / std::pow(g, alpha + 3.0)),
          A(g + alpha * g + alpha * g * g),
          B(alpha * (1.0 + g)),
          e((alpha + g + alpha * g) / g) {}
};

double phi_log(double t, const PhiCoef& k)   // phi(e^t)
{
    return k.C * (k.A - k.B * t) * std::exp(-k.e * t);
}

double phi_star_log(double t, double alpha, double g)   // phi*(e^t)
{
    const PhiCoef k(alpha, g);
    const double c = (1.0 + alpha + alpha * g) / g;
    return k.C * std::exp(-c * t) * ((k.A - k.B * t) / c - k.B / (c * c));
}

// int_1^inf (1/gamma) y^{-1/gamma-1} (int_1^y g)^2 dy, written in t = log y.
// Equals the double integral of min(y^{-1/gamma}, x^{-1/gamma}) g(x) g(y).
double min_kernel_quadratic(const std::function<double(double)>& g_log, double gamma,
                            const QuadOptions& q)
{
    auto inner = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        return integrate([&](double s) { return g_log(s) * std::exp(s); }, 0.0, t, q);
    };
    auto outer = [&](double t) {
        const double w = std::exp(-t / gamma);
        if (w == 0.0)
            return 0.0;
        const double G = inner(t);
        return w * G * G / gamma;
    };
    return integrate(outer, 0.0, kInf, q);
}

}  // namespace

double phi(double x, double alpha, double gamma1)
{
    if (!(x >= 1.0))
        throw std::domain_error("phi: x must be >= 1");
    return phi_log(std::log(x), PhiCoef(alpha, gamma1));
}

double phi_star(double x, double alpha, double gamma1)
{
    if (!(x >= 1.0))
        throw std::domain_error("phi_star: x must be >= 1");
    if (std::isinf(x))
        return 0.0;
    return phi_star_log(std::log(x), alpha, gamma1);
}

double phi_star_quadrature(double x, double alpha, double gamma1)
{
    if (!(x >= 1.0))
        throw std::domain_error("phi_star: x must be >= 1");
    const PhiCoef k(alpha, gamma1);
    return integrate_to_infinity(
        [&](double t) { return std::pow(t, -1.0 / gamma1) * phi_log(std::log(t), k); }, x);
}

double eta_star(double alpha, double gamma1)
{
    if (!(alpha >= 0.0))
        throw std::invalid_argument("alpha must be nonnegative");
    require_positive(gamma1, "gamma1");
    const double g = gamma1;
    const double b = alpha * (1.0 + g);
    return (1.0 + alpha) / std::pow(g, 2.0 + alpha) * (b * b + 1.0) / std::pow(b + 1.0, 3.0);
}

double eta_star_quadrature(double alpha, double gamma1)
{
    const double g = gamma1;
    auto f = [&](double x) {
        const double lx = std::log(x);
        const double dens = std::pow(x, -1.0 - 1.0 / g);
        const double score = (lx - g) / (g * g * g) * dens;   // d l_g(x) / d g
        const double l = dens / g;
        return score * score * std::pow(l, alpha - 1.0);
    };
    return (1.0 + alpha) * integrate_to_infinity(f, 1.0);
}

double mu(double alpha, double gamma1, double tau1)
{
    if (tau1 > 0.0)
        throw std::domain_error("tau1 must be nonpositive");
    require_positive(alpha, "alpha");
    require_positive(gamma1, "gamma1");
    const PhiCoef k(alpha, gamma1);
    const double g = gamma1;
    auto f = [&](double x) {
        const double t = std::log(x);
        const double kern = tau1 == 0.0 ? t / (g * g) : std::expm1(tau1 * t / g) / (g * tau1);
        return std::exp(-t / g) * kern * phi_log(t, k);
    };
    return integrate_to_infinity(f, 1.0, {1e-12, 30});
}

double mu_printed(double alpha, double gamma1, double tau1)
{
    const double a = alpha, g = gamma1, t = tau1;
    const double d1 = a - t + a * g + 1.0;
    const double d0 = a + a * g + 1.0;
    return a / (t * std::pow(g, a + 2.0)) * (t - 1.0) / d1 +
           t * g * g * (2.0 * a - t + 2.0 * a * g + 2.0) / (d0 * d0 * d1 * d1);
}

VarianceKernel::VarianceKernel(double alpha, double gamma1, double gamma2)
    : alpha_(alpha), gamma1_(gamma1), gamma2_(gamma2),
      gamma_(gamma1 * gamma2 / (gamma1 + gamma2)), p_(gamma2 / (gamma1 + gamma2)),
      q_(gamma1 / (gamma1 + gamma2))
{
    require_variance_domain(alpha, gamma1, gamma2);
}

double VarianceKernel::psi1(double x) const
{
    return std::pow(x, 1.0 / gamma2_) * phi(x, alpha_, gamma1_) -
           std::pow(x, 1.0 / gamma_ - 1.0) * phi_star(x, alpha_, gamma1_) / gamma2_;
}

double VarianceKernel::psi2(double x) const
{
    return std::pow(x, 1.0 / gamma_ - 1.0) * phi_star(x, alpha_, gamma1_);
}

double VarianceKernel::operator()(double x, double y) const
{
    return p_ * (psi1(x) * psi1(y)) + q_ / (gamma1_ * gamma1_) * (psi2(x) * psi2(y));
}

double sigma_squared(double alpha, double gamma1, double gamma2, const SigmaOptions& opt)
{
    require_variance_domain(alpha, gamma1, gamma2);
    const double g = gamma1 * gamma2 / (gamma1 + gamma2);
    const double p = gamma2 / (gamma1 + gamma2);
    const double q = 1.0 - p;
    const PhiCoef k(alpha, gamma1);
    const QuadOptions qo{opt.rel_tol, 30};

    auto psi1 = [&](double t) {
        return std::exp(t / gamma2) * phi_log(t, k) -
               std::exp((1.0 / g - 1.0) * t) * phi_star_log(t, alpha, gamma1) / gamma2;
    };
    auto psi2 = [&](double t) {
        return std::exp((1.0 / g - 1.0) * t) * phi_star_log(t, alpha, gamma1);
    };
    const double a = phi_star_log(0.0, alpha, gamma1);
    const double cross = integrate(
        [&](double t) { return std::exp(-t / g) * psi1(t) * std::exp(t); }, 0.0, kInf, qo);

    return p * min_kernel_quadratic(psi1, g, qo) +
           q / (gamma1 * gamma1) * min_kernel_quadratic(psi2, g, qo) + p * a * a -
           2.0 * a * p * cross;
}

double sigma_squared_compact(double alpha, double gamma1, double gamma2, const SigmaOptions& opt)
{
    require_variance_domain(alpha, gamma1, gamma2);
    const double g = gamma1 * gamma2 / (gamma1 + gamma2);
    auto f = [&](double t) {
        const double ps = phi_star_log(t, alpha, gamma1);
        return std::exp(t / g) * ps * ps;   // s^{1/g - 1} phi*(s)^2 ds with s = e^t
    };
    return integrate(f, 0.0, kInf, {opt.rel_tol, 30}) / gamma1;
}

double sigma_squared_printed(double alpha, double gamma1, double gamma2, const SigmaOptions& opt)
{
    require_variance_domain(alpha, gamma1, gamma2);
    const double g = gamma1 * gamma2 / (gamma1 + gamma2);
    const double p = gamma2 / (gamma1 + gamma2);
    const double q = 1.0 - p;
    const PhiCoef k(alpha, gamma1);
    const QuadOptions qo{opt.rel_tol, 30};

    auto psi1 = [&](double t) {
        return std::exp(t / gamma2) * phi_log(t, k) -
               q * std::exp(t / g) * phi_star_log(t, alpha, gamma1);
    };
    auto psi2 = [&](double t) { return std::exp(t / g) * phi_star_log(t, alpha, gamma1); };
    const double a = phi_star_log(0.0, alpha, gamma1);
    const double cross = integrate(
        [&](double t) { return std::exp(-t / g) * psi1(t) * std::exp(t); }, 0.0, kInf, qo);

    return p * min_kernel_quadratic(psi1, g, qo) +
           q / (gamma1 * gamma1) * min_kernel_quadratic(psi2, g, qo) - 2.0 * cross + p * a * a;
}

McEstimate sigma_squared_mc(double alpha, double gamma1, double gamma2,
                            const GaussianOracleConfig& config)
{
    require_variance_domain(alpha, gamma1, gamma2);
    if (config.grid_points < 1000 || config.replicates < 1000)
        throw std::invalid_argument("oracle needs at least 1000 grid points and replicates");

    const double g = gamma1 * gamma2 / (gamma1 + gamma2);
    const double p = gamma2 / (gamma1 + gamma2);
    const double q = 1.0 - p;
    const PhiCoef k(alpha, gamma1);

    // Integrand of the functional behaves like u^{kappa - 1} near u = 0;
    // choose the lower cutoff so that the dropped mass is about 1e-6.
    const double kappa = 0.5 - q + alpha * (g + p);
    const double u_min = std::clamp(std::pow(1e-6, 1.0 / kappa), 1e-60, 1e-4);

    const std::size_t m = static_cast<std::size_t>(config.grid_points);
    std::vector<double> u(m), dx(m), c1(m), c2(m), w(m);
    const double lu = std::log(u_min);
    for (std::size_t i = 0; i < m; ++i)
        u[i] = i + 1 == m ? 1.0 : std::exp(lu * (1.0 - static_cast<double>(i) / (m - 1)));

    // Trapezoid weights in u for int_0^1 phi(x(u)) J(x(u)) g u^{-g-1} du, x = u^{-g}.
    for (std::size_t i = 0; i < m; ++i) {
        const double lo = i == 0 ? u[0] : u[i - 1];
        const double hi = i + 1 == m ? u[m - 1] : u[i + 1];
        const double t = -g * std::log(u[i]);   // log x
        const double jac = g * std::exp((-g - 1.0) * std::log(u[i]));
        w[i] = 0.5 * (hi - lo) * phi_log(t, k) * jac;
        c1[i] = std::exp(t / gamma2);    // x^{1/g2}
        c2[i] = std::exp(-t / gamma1);   // x^{-1/g1}
    }

    const std::size_t reps = static_cast<std::size_t>(config.replicates);
    std::vector<double> out(reps);
    parallel_for(reps, config.threads, [&](std::size_t r) {
        RandomStream rng(config.seed, r);
        std::vector<double> b1(m), b2(m), kint(m);
        double s1 = 0.0, s2 = 0.0, prev = 0.0;
        const double sp = std::sqrt(p), sq = std::sqrt(q);
        for (std::size_t i = 0; i < m; ++i) {
            const double du = std::sqrt(u[i] - prev);
            s1 += sp * du * rng.normal();
            s2 += sq * du * rng.normal();
            b1[i] = s1;
            b2[i] = s2;
            prev = u[i];
        }
        // kint(u) = int_u^1 v^{-2} (p B2(v) - q B1(v)) dv
        kint[m - 1] = 0.0;
        for (std::size_t i = m - 1; i-- > 0;) {
            const double f0 = (p * b2[i] - q * b1[i]) / (u[i] * u[i]);
            const double f1 = (p * b2[i + 1] - q * b1[i + 1]) / (u[i + 1] * u[i + 1]);
            kint[i] = kint[i + 1] + 0.5 * (u[i + 1] - u[i]) * (f0 + f1);
        }
        const double b1_end = b1[m - 1];
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            acc += w[i] * (c1[i] * b1[i] + c2[i] * (kint[i] - b1_end));
        out[r] = acc;
    });

    double mean = 0.0;
    for (double v : out)
        mean += v;
    mean /= static_cast<double>(reps);
    double m2 = 0.0, m4 = 0.0;
    for (double v : out) {
        const double d = (v - mean) * (v - mean);
        m2 += d;
        m4 += d * d;
    }
    const double nr = static_cast<double>(reps);
    const double var = m2 / (nr - 1.0);
    const double mu4 = m4 / nr;
    McEstimate res;
    res.estimate = var;
    res.stderr_ = std::sqrt(std::max(0.0, (mu4 - var * var * (nr - 3.0) / (nr - 1.0)) / nr));
    res.mean = mean;
    res.mean_stderr = std::sqrt(var / nr);
    return res;
}

AsymptoticConstants asymptotic_constants(double alpha, const ModelParams& model)
{
    AsymptoticConstants c;
    c.alpha = alpha;
    c.model = model;
    c.eta_star = eta_star(alpha, model.gamma1);
    c.mu = mu(alpha, model.gamma1, model.tau1);
    c.mu_printed = model.tau1 == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                     : mu_printed(alpha, model.gamma1, model.tau1);
    c.sigma2 = sigma_squared(alpha, model.gamma1, model.gamma2);
    c.sigma2_printed = sigma_squared_printed(alpha, model.gamma1, model.gamma2);
    return c;
}

double normal_quantile(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p outside (0, 1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

Interval asymptotic_ci(const EstimateResult& estimate, const ModelParams& model, double level)
{
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("confidence level must lie in (0, 1)");
    if (estimate.method != Method::MDPD || !(estimate.alpha > 0.0))
        throw std::invalid_argument("confidence interval needs an MDPD estimate with alpha > 0");
    if (estimate.k == 0)
        throw std::invalid_argument("estimate carries k = 0");
    const double a = estimate.alpha;
    const double z = normal_quantile(1.0 - (1.0 - level) / 2.0);
    const double s2 = sigma_squared(a, model.gamma1, model.gamma2);
    const double half = z * (1.0 + 1.0 / a) * std::sqrt(s2) /
                        (eta_star(a, model.gamma1) * std::sqrt(static_cast<double>(estimate.k)));
    return {estimate.gamma1_hat - half, estimate.gamma1_hat + half};
}

}  // namespace censtail
