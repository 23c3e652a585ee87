#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace censtail {

struct CensoredObservation {
    double z = 0.0;
    int delta = 0;   // 1 = uncensored
};

// Observed times sorted ascending, with the censoring indicator that
// travelled with each time. Position 0 holds Z_{1:n}.
class OrderedSample {
public:
    OrderedSample() = default;

    std::size_t size() const { return z_.size(); }
    const std::vector<double>& z() const { return z_; }
    const std::vector<int>& delta() const { return delta_; }

    // Top-down access: rank 1 is the largest observation Z_{n:n}.
    double z_top(std::size_t rank) const { return z_[z_.size() - rank]; }
    int delta_top(std::size_t rank) const { return delta_[delta_.size() - rank]; }

    // Threshold Z_{n-k:n}.
    double threshold(std::size_t k) const { return z_[z_.size() - k - 1]; }

    // Copy with every time multiplied by c > 0.
    OrderedSample scaled(double c) const;

private:
    friend OrderedSample order_sample(std::span<const CensoredObservation>);
    std::vector<double> z_;
    std::vector<int> delta_;
};

struct TailConfig {
    std::size_t k = 0;
    double alpha = 0.0;
};

struct ModelParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double eta = 1.0;
    double tau1 = -1.0;

    double p() const { return gamma2 / (gamma1 + gamma2); }
    double q() const { return gamma1 / (gamma1 + gamma2); }
    double gamma() const { return gamma1 * gamma2 / (gamma1 + gamma2); }

    static ModelParams from_p(double gamma1, double p, double eta = 1.0, double tau1 = -1.0);
};

struct LogExcess {
    double l = 0.0;
    int delta = 0;
};

OrderedSample order_sample(std::span<const CensoredObservation> observations);

// Throws if k is outside [1, n-1].
void check_window(const OrderedSample& sample, std::size_t k);

// L_i = log(Z_{n-i+1:n} / Z_{n-k:n}) with its indicator, i = 1..k.
std::vector<LogExcess> top_log_excesses(const OrderedSample& sample, std::size_t k);

}  // namespace censtail
