#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "censtail/sample.hpp"

namespace censtail {

enum class Method { Hill, EFG, Worms, MNS, MDPD };

std::string_view method_name(Method m);

struct SolverOptions {
    double domain_lo = 1e-6;
    double domain_hi = 50.0;
    int grid_points = 200;
    double tol_abs = 1e-10;
    int max_iter = 200;
};

struct RootDiagnostics {
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::vector<double> all_roots;
};

struct EstimateResult {
    double gamma1_hat = 0.0;
    Method method = Method::MNS;
    double alpha = 0.0;
    std::size_t k = 0;
    RootDiagnostics diagnostics;
};

class estimation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GridPoint {
    double gamma1 = 0.0;
    double rho = 0.0;
};

class no_root_error : public estimation_error {
public:
    no_root_error(const std::string& what, std::vector<GridPoint> grid)
        : estimation_error(what), grid_(std::move(grid)) {}
    const std::vector<GridPoint>& grid() const { return grid_; }

private:
    std::vector<GridPoint> grid_;
};

double hill_gamma(const OrderedSample& sample, std::size_t k);
double censored_proportion(const OrderedSample& sample, std::size_t k);
double efg_estimator(const OrderedSample& sample, std::size_t k);
double worms_estimator(const OrderedSample& sample, std::size_t k);
double mns_estimator(const OrderedSample& sample, std::size_t k);

// Top window reduced to the terms with a nonzero weight; residual and
// objective evaluations reuse it across many gamma values.
class MdpdWindow {
public:
    MdpdWindow(const OrderedSample& sample, TailConfig config);

    double alpha() const { return alpha_; }
    std::size_t k() const { return k_; }
    bool empty() const { return a_.empty(); }

    double residual(double gamma1) const;
    double objective(double gamma1) const;

private:
    std::size_t k_;
    double alpha_;
    std::vector<double> a_;
    std::vector<double> l_;
};

double mdpd_residual(double gamma1, const OrderedSample& sample, TailConfig config);
double mdpd_objective(double gamma1, const OrderedSample& sample, TailConfig config);

EstimateResult mdpd_estimate(const OrderedSample& sample, TailConfig config,
                             const SolverOptions& options = {});

}  // namespace censtail
