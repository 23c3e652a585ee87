#include "censtail/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace censtail {

namespace {

// Far-tail nodes of infinite-range maps can produce inf * 0 for integrands
// written as growing factor times decaying factor, or subnormals on which the
// relative error test never settles. Both contribute nothing to the integral.
double tail_value(double v)
{
    return std::isfinite(v) && std::fabs(v) > 1e-280 ? v : 0.0;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt)
{
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    if (std::isfinite(a) && std::isfinite(b))
        return gauss_kronrod<double, 15>::integrate(f, a, b, static_cast<unsigned>(opt.max_depth),
                                                    opt.rel_tol, &err);
    auto g = [&](double x) { return tail_value(f(x)); };
    return gauss_kronrod<double, 15>::integrate(g, a, b, static_cast<unsigned>(opt.max_depth),
                                                opt.rel_tol, &err);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadOptions& opt)
{
    if (!(a > 0.0))
        throw std::invalid_argument("integrate_to_infinity: lower limit must be positive");
    // x = a e^t; integrands here decay polynomially, so t in [0, inf) is split
    // into [0, 40] handled by Gauss-Kronrod and the remainder by the library's
    // own infinite-range transform.
    auto g = [&](double t) {
        const double x = a * std::exp(t);
        return tail_value(f(x) * x);
    };
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    const double head = gauss_kronrod<double, 15>::integrate(
        g, 0.0, 40.0, static_cast<unsigned>(opt.max_depth), opt.rel_tol, &err);
    const double tail = gauss_kronrod<double, 15>::integrate(
        g, 40.0, std::numeric_limits<double>::infinity(), static_cast<unsigned>(opt.max_depth),
        opt.rel_tol, &err);
    return head + tail;
}

}  // namespace censtail
