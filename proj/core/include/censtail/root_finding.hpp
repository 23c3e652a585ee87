#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace censtail {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Brent's zeroin: inverse quadratic / secant steps safeguarded by bisection.
// Stops when |f(x)| <= ftol or the bracket shrinks below machine resolution.
// Requires f(a) and f(b) of opposite sign.
template <class F>
RootResult brent_root(F&& f, double a, double b, double fa, double fb, double ftol, int max_iter)
{
    if (fa * fb > 0.0)
        throw std::invalid_argument("brent_root: endpoints do not bracket a root");
    if (fa == 0.0)
        return {a, fa, 0, true};
    if (fb == 0.0)
        return {b, fb, 0, true};

    double c = a, fc = fa;
    double d = b - a, e = d;
    RootResult r;
    for (int it = 1; it <= max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.220446049250313e-16 * std::fabs(b);
        const double xm = 0.5 * (c - b);
        r = {b, fb, it, false};
        if (std::fabs(fb) <= ftol) {
            r.converged = true;
            return r;
        }
        if (std::fabs(xm) <= tol1)
            return r;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    r = {b, fb, max_iter, std::fabs(fb) <= ftol};
    return r;
}

}  // namespace censtail
