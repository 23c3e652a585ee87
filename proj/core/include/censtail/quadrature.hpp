#pragma once

#include <functional>

namespace censtail {

struct QuadOptions {
    double rel_tol = 1e-10;
    int max_depth = 30;
};

// Adaptive Gauss-Kronrod (15 point) on a finite interval.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

// Integral over [a, inf); the tail is mapped to a finite range by t = log(x / a).
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadOptions& opt = {});

}  // namespace censtail
