#pragma once

#include <cstddef>
#include <vector>

#include "censtail/sample.hpp"

namespace censtail {

// Product-limit survival, right-continuous: product over Z_{i:n} <= x.
double kaplan_meier_survival(const OrderedSample& sample, double x);

// Nelson-Aalen survival with the strict product over Z_{i:n} < z.
double nelson_aalen_survival(const OrderedSample& sample, double z);

// NA survival ratio between Z_{n-i+1:n} and Z_{n-k:n} in closed form:
// prod_{j=i+1..k} exp(-delta_{[n-j+1:n]} / j).
double na_tail_ratio(const OrderedSample& sample, std::size_t k, std::size_t i);

// a_i = (delta_i / i) * prod_{j=i+1..k} exp(-delta_j / j), i = 1..k (top-down).
std::vector<double> mdpd_weights(const OrderedSample& sample, std::size_t k);

struct Subdistributions {
    double hn = 0.0;
    double hn1 = 0.0;
};

Subdistributions empirical_subdistributions(const OrderedSample& sample, double x);

}  // namespace censtail
