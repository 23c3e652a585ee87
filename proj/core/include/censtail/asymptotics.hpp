#pragma once

#include <cstdint>

#include "censtail/estimators.hpp"
#include "censtail/sample.hpp"

namespace censtail {

// phi(x) = (alpha / g^{alpha+3}) (g + alpha g + alpha g^2 - alpha (1+g) log x)
//          / x^{(alpha + g + alpha g) / g},  x >= 1.
double phi(double x, double alpha, double gamma1);

// Tail integral phi*(x) = int_x^inf t^{-1/g} phi(t) dt, closed form.
double phi_star(double x, double alpha, double gamma1);
double phi_star_quadrature(double x, double alpha, double gamma1);

double eta_star(double alpha, double gamma1);
// (1+alpha) int_1^inf (d l_g / d g)^2 l_g^{alpha-1} dx by quadrature.
double eta_star_quadrature(double alpha, double gamma1);

// Bias constant: int_1^inf x^{-1/g} (x^{tau/g} - 1)/(g tau) phi(x) dx, by
// quadrature; tau = 0 uses the limiting kernel log(x)/g^2.
double mu(double alpha, double gamma1, double tau1);
// The alternative printed closed form; kept only for discrepancy reports.
double mu_printed(double alpha, double gamma1, double tau1);

// Pieces of the variance integrand: psi1, psi2 and
// K(x, y) = p psi1(x) psi1(y) + (q / gamma1^2) psi2(x) psi2(y), for x, y >= 1.
class VarianceKernel {
public:
    VarianceKernel(double alpha, double gamma1, double gamma2);
    double psi1(double x) const;
    double psi2(double x) const;
    double operator()(double x, double y) const;

private:
    double alpha_, gamma1_, gamma2_, gamma_, p_, q_;
};

struct SigmaOptions {
    double rel_tol = 1e-10;
};

// Asymptotic variance of the weighted Gaussian functional; needs gamma1 < gamma2.
double sigma_squared(double alpha, double gamma1, double gamma2, const SigmaOptions& opt = {});
// Same quantity written as a single integral over the martingale variance.
double sigma_squared_compact(double alpha, double gamma1, double gamma2,
                             const SigmaOptions& opt = {});
// The variance expression with the alternative psi kernels and cross term
// as printed; kept only for discrepancy reports (it can be negative).
double sigma_squared_printed(double alpha, double gamma1, double gamma2,
                             const SigmaOptions& opt = {});

struct GaussianOracleConfig {
    int grid_points = 4096;
    int replicates = 20000;
    std::uint64_t seed = 20250101;
    int threads = 0;   // 0 = hardware concurrency
};

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double mean = 0.0;
    double mean_stderr = 0.0;
};

McEstimate sigma_squared_mc(double alpha, double gamma1, double gamma2,
                            const GaussianOracleConfig& config = {});

struct AsymptoticConstants {
    double alpha = 0.0;
    ModelParams model;
    double eta_star = 0.0;
    double mu = 0.0;
    double mu_printed = 0.0;
    double sigma2 = 0.0;
    double sigma2_printed = 0.0;
};

AsymptoticConstants asymptotic_constants(double alpha, const ModelParams& model);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// gamma_hat -/+ z (1+1/alpha) sigma / (eta* sqrt(k)), constants evaluated at model.
Interval asymptotic_ci(const EstimateResult& estimate, const ModelParams& model, double level);

double normal_quantile(double p);

}  // namespace censtail
