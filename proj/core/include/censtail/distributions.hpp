#pragma once

namespace censtail {

// Burr: F(x) = 1 - (1 + x^{1/eta})^{-eta/gamma1}, x >= 0.
double burr_cdf(double x, double gamma1, double eta);
double burr_quantile(double u, double gamma1, double eta);

// Frechet: G(x) = exp(-x^{-1/gamma2}), x > 0.
double frechet_cdf(double x, double gamma2);
double frechet_quantile(double u, double gamma2);

// gamma2 such that p = gamma2 / (gamma1 + gamma2).
double gamma2_from_p(double gamma1, double p);

}  // namespace censtail
