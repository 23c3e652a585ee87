#include "censtail/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace censtail {

double burr_cdf(double x, double gamma1, double eta)
{
    if (!(x > 0.0))
        return 0.0;
    // 1 - (1 + x^{1/eta})^{-eta/gamma1}
    return -std::expm1(-(eta / gamma1) * std::log1p(std::pow(x, 1.0 / eta)));
}

double burr_quantile(double u, double gamma1, double eta)
{
    if (!(u >= 0.0 && u < 1.0))
        throw std::domain_error("burr_quantile: u outside [0, 1)");
    if (!(gamma1 > 0.0 && eta > 0.0))
        throw std::invalid_argument("burr_quantile: parameters must be positive");
    // ((1-u)^{-gamma1/eta} - 1)^eta
    return std::pow(std::expm1(-(gamma1 / eta) * std::log1p(-u)), eta);
}

double frechet_cdf(double x, double gamma2)
{
    if (!(x > 0.0))
        return 0.0;
    return std::exp(-std::pow(x, -1.0 / gamma2));
}

double frechet_quantile(double u, double gamma2)
{
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("frechet_quantile: u outside (0, 1)");
    if (!(gamma2 > 0.0))
        throw std::invalid_argument("frechet_quantile: gamma2 must be positive");
    return std::pow(-std::log(u), -gamma2);
}

double gamma2_from_p(double gamma1, double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("p must lie in (0, 1)");
    if (!(gamma1 > 0.0))
        throw std::invalid_argument("gamma1 must be positive");
    return p * gamma1 / (1.0 - p);
}

}  // namespace censtail
