#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "censtail/empirical.hpp"
#include "censtail/estimators.hpp"
#include "test_support.hpp"

using namespace censtail;
using censtail::testing::make_sample;
using censtail::testing::pareto_censored;
using censtail::testing::pareto_sample;

namespace {

const double kLog2 = std::numbers::ln2;

// Term-by-term residual straight from the weights' product definition.
double residual_oracle(double g, const OrderedSample& s, std::size_t k, double alpha)
{
    const std::size_t n = s.size();
    const double thr = s.z()[n - k - 1];
    double sum = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
        double prod = 1.0;
        for (std::size_t j = i + 1; j <= k; ++j)
            prod *= std::exp(-s.delta()[n - j] / static_cast<double>(j));
        const double a = s.delta()[n - i] / static_cast<double>(i) * prod;
        const double r = s.z()[n - i] / thr;
        sum += a * (g - std::log(r)) * std::pow(r, -alpha * (1.0 + 1.0 / g));
    }
    const double d = 1.0 + alpha + alpha * g;
    return sum - alpha * g * (g + 1.0) / (d * d);
}

// Objective from the density-power form: int l^{1+a} - (1+1/a) sum a_i l^a(r_i).
double objective_oracle(double g, const OrderedSample& s, std::size_t k, double alpha)
{
    const std::size_t n = s.size();
    const double thr = s.z()[n - k - 1];
    const auto w = mdpd_weights(s, k);
    double emp = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
        const double r = s.z()[n - i] / thr;
        const double dens = std::pow(r, -1.0 - 1.0 / g) / g;
        emp += w[i - 1] * std::pow(dens, alpha);
    }
    // int_1^inf (x^{-1-1/g}/g)^{1+a} dx = g^{-1-a} / ((1+a)(1+1/g) - 1)
    const double model = std::pow(g, -1.0 - alpha) / ((1.0 + alpha) * (1.0 + 1.0 / g) - 1.0);
    return model - (1.0 + 1.0 / alpha) * emp;
}

}  // namespace

TEST(Hill, HandValues)
{
    EXPECT_NEAR(hill_gamma(make_sample({1, 2, 4}, {1, 1, 1}), 2), 1.5 * kLog2, 1e-15);
    EXPECT_NEAR(hill_gamma(make_sample({1, std::exp(1.0)}, {1, 1}), 1), 1.0, 1e-15);
    EXPECT_THROW(hill_gamma(make_sample({3, 3, 3}, {1, 1, 1}), 2), estimation_error);
}

TEST(Hill, ExactParetoGrid)
{
    // z_i = u i^g: Hill = (g/k) sum_{i=1..k} log((n-i+1)/(n-k))
    const double u = 2.5, g = 0.4;
    const std::size_t n = 500;
    std::vector<double> z;
    std::vector<int> d(n, 1);
    for (std::size_t i = 1; i <= n; ++i)
        z.push_back(u * std::pow(static_cast<double>(i), g));
    const auto s = make_sample(z, d);
    for (std::size_t k : {1u, 50u, 250u}) {
        double expect = 0.0;
        for (std::size_t i = 1; i <= k; ++i)
            expect += std::log(static_cast<double>(n - i + 1) / static_cast<double>(n - k));
        expect *= g / static_cast<double>(k);
        EXPECT_NEAR(hill_gamma(s, k), expect, 1e-13);
    }
}

TEST(CensoredProportion, Values)
{
    EXPECT_EQ(censored_proportion(make_sample({1, 2, 3, 4, 5}, {0, 1, 0, 1, 1}), 4), 0.75);
    EXPECT_EQ(censored_proportion(make_sample({1, 2, 3}, {0, 1, 1}), 2), 1.0);
    EXPECT_EQ(censored_proportion(make_sample({1, 2, 3}, {1, 0, 0}), 2), 0.0);
}

TEST(Efg, Values)
{
    EXPECT_NEAR(efg_estimator(make_sample({1, 2, 4}, {1, 0, 1}), 2), 3.0 * kLog2, 1e-15);
    const auto s = make_sample({1, 2, 4}, {1, 1, 1});
    EXPECT_EQ(efg_estimator(s, 2), hill_gamma(s, 2));
    EXPECT_THROW(efg_estimator(make_sample({1, 2, 4}, {1, 0, 0}), 2), estimation_error);
}

TEST(Worms, HandValues)
{
    const auto s = make_sample({1, 2, 4}, {1, 1, 1});
    EXPECT_NEAR(worms_estimator(s, 2), 1.5 * kLog2, 1e-15);
    EXPECT_NEAR(worms_estimator(s, 1), kLog2, 1e-15);
}

TEST(Worms, FullyCensoredWindowBruteForce)
{
    const auto s = make_sample({1, 2, 3, 5, 8}, {1, 1, 0, 0, 0});
    // KM(3) = KM(5) = KM(2) = (4/5)(3/4) since the top three are censored.
    const double km2 = 0.8 * 0.75;
    const double expect = (km2 / km2) * std::log(8.0 / 5.0) + (km2 / km2) * std::log(5.0 / 3.0) +
                          (km2 / km2) * std::log(3.0 / 2.0);
    EXPECT_NEAR(worms_estimator(s, 3), expect, 1e-15);
}

TEST(Worms, ZeroThresholdMassThrows)
{
    EXPECT_THROW(worms_estimator(make_sample({1, 2, 2}, {1, 0, 1}), 1), estimation_error);
}

TEST(Mns, HandValues)
{
    EXPECT_NEAR(mns_estimator(make_sample({1, 2, 4}, {1, 1, 1}), 2), 1.18740362368592359, 1e-15);
    EXPECT_NEAR(mns_estimator(make_sample({1, 3}, {0, 1}), 1), std::log(3.0), 1e-15);
    EXPECT_EQ(mns_estimator(make_sample({1, 2, 4}, {1, 0, 0}), 2), 0.0);
}

TEST(MdpdResidual, HandValue)
{
    const auto s = make_sample({1, std::exp(1.0)}, {0, 1});
    EXPECT_NEAR(mdpd_residual(1.0, s, {1, 1.0}), -2.0 / 9.0, 1e-15);
    EXPECT_THROW(mdpd_residual(0.0, s, {1, 1.0}), std::invalid_argument);
}

TEST(MdpdResidual, EmptyWeightsLeaveModelTerm)
{
    const auto s = make_sample({1, 2, 4, 8}, {1, 0, 0, 0});
    for (double g : {0.01, 0.3, 1.0, 7.0}) {
        const double a = 0.4, d = 1.0 + a + a * g;
        EXPECT_NEAR(mdpd_residual(g, s, {3, a}), -a * g * (g + 1.0) / (d * d), 1e-15);
        EXPECT_LT(mdpd_residual(g, s, {3, a}), 0.0);
    }
}

TEST(MdpdResidual, MatchesTermwiseOracle)
{
    const auto s = pareto_sample(300, 0.4, 0.8, 21);
    for (double a : {0.05, 0.3, 1.0})
        for (std::size_t k : {10u, 80u})
            for (double g = 0.02; g < 20.0; g *= 1.7) {
                const double o = residual_oracle(g, s, k, a);
                EXPECT_NEAR(mdpd_residual(g, s, {k, a}), o, 1e-12 * (1.0 + std::fabs(o)));
            }
}

TEST(MdpdEstimate, AlphaZeroIsMns)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto s = pareto_sample(200, 0.3, 0.7, seed);
        const auto e = mdpd_estimate(s, {50, 0.0});
        EXPECT_EQ(e.gamma1_hat, mns_estimator(s, 50));
        EXPECT_EQ(e.method, Method::MNS);
    }
}

TEST(MdpdEstimate, ScalarOracleRoot)
{
    // Root of (g-1) e^{-0.1(1+1/g)} = 0.1 g (g+1) / (1.1 + 0.1 g)^2, from a
    // 30-digit bisection.
    const auto s = make_sample({1, std::exp(1.0)}, {1, 1});
    const auto e = mdpd_estimate(s, {1, 0.1});
    EXPECT_NEAR(e.gamma1_hat, 1.21685964451363289, 1e-9);
    EXPECT_LE(std::fabs(e.diagnostics.residual), 1e-10);
    EXPECT_LE(std::fabs(mdpd_residual(e.gamma1_hat, s, {1, 0.1})), 1e-10);
}

TEST(MdpdEstimate, RootValidity)
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto s = pareto_sample(400, 0.3, 0.6, seed);
        for (double a : {0.1, 0.5, 1.0}) {
            const auto e = mdpd_estimate(s, {80, a});
            EXPECT_EQ(e.method, Method::MDPD);
            EXPECT_LE(std::fabs(e.diagnostics.residual), 1e-10);
            EXPECT_LE(std::fabs(residual_oracle(e.gamma1_hat, s, 80, a)), 1e-10);
            EXPECT_GT(e.gamma1_hat, e.diagnostics.bracket_lo);
            EXPECT_LT(e.gamma1_hat, e.diagnostics.bracket_hi);
            EXPECT_FALSE(e.diagnostics.all_roots.empty());
        }
    }
}

TEST(MdpdEstimate, ConsistencyOnUncensoredPareto)
{
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto s = pareto_sample(1000, 0.5, 0.0, 1000 + seed);
        const auto e = mdpd_estimate(s, {100, 0.1});
        EXPECT_LE(std::fabs(e.diagnostics.residual), 1e-10);
        hits += std::fabs(e.gamma1_hat - 0.5) < 0.15;   // about 2.9 sd
    }
    EXPECT_GE(hits, 190);
}

TEST(MdpdEstimate, AlphaToZeroContinuity)
{
    // Mostly uncensored samples: the weight mass deficit is small there.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto s = pareto_sample(500, 0.3, 3.0, seed);
        const auto e = mdpd_estimate(s, {100, 1e-4});
        EXPECT_LE(std::fabs(e.gamma1_hat - mns_estimator(s, 100)), 1e-2);
    }
}

TEST(MdpdEstimate, ScaleInvariance)
{
    const auto s = pareto_sample(300, 0.4, 0.9, 5);
    const auto t = s.scaled(37.25);
    const std::size_t k = 70;
    EXPECT_NEAR(hill_gamma(s, k), hill_gamma(t, k), 1e-13);
    EXPECT_NEAR(efg_estimator(s, k), efg_estimator(t, k), 1e-13);
    EXPECT_NEAR(worms_estimator(s, k), worms_estimator(t, k), 1e-13);
    EXPECT_NEAR(mns_estimator(s, k), mns_estimator(t, k), 1e-13);
    EXPECT_NEAR(mdpd_estimate(s, {k, 0.3}).gamma1_hat, mdpd_estimate(t, {k, 0.3}).gamma1_hat, 1e-9);
}

TEST(MdpdEstimate, AllCensoredWindowHasNoRoot)
{
    const auto s = make_sample({1, 2, 3, 4, 5}, {1, 1, 0, 0, 0});
    try {
        mdpd_estimate(s, {3, 0.5});
        FAIL() << "expected an error";
    } catch (const estimation_error& e) {
        EXPECT_STREQ(e.what(), "no root exists");
    }
}

TEST(MdpdEstimate, NoRootInDomainCarriesGrid)
{
    const auto s = pareto_sample(300, 0.4, 0.9, 6);
    SolverOptions o;
    o.domain_lo = 5.0;
    o.domain_hi = 50.0;
    o.grid_points = 25;
    try {
        mdpd_estimate(s, {60, 0.3}, o);
        FAIL() << "expected an error";
    } catch (const no_root_error& e) {
        EXPECT_STREQ(e.what(), "no root in bracket");
        ASSERT_EQ(e.grid().size(), 25u);
        EXPECT_EQ(e.grid().front().gamma1, 5.0);
        for (const auto& g : e.grid())
            EXPECT_GT(g.rho, 0.0);
    }
}

TEST(MdpdObjective, StationaryAtRootAndLocalMinimum)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto s = pareto_sample(400, 0.3, 0.7, 40 + seed);
        for (double a : {0.1, 0.5}) {
            const TailConfig c{100, a};
            const double g = mdpd_estimate(s, c).gamma1_hat;
            const double h = 1e-6;
            const double fp = mdpd_objective(g + h, s, c), fm = mdpd_objective(g - h, s, c);
            const double f0 = mdpd_objective(g, s, c);
            EXPECT_NEAR((fp - fm) / (2.0 * h), 0.0, 1e-5);
            const double h2 = 1e-3;
            EXPECT_GE(mdpd_objective(g + h2, s, c) + mdpd_objective(g - h2, s, c) - 2.0 * f0, 0.0);
        }
    }
}

TEST(MdpdObjective, DerivativeIsScaledResidual)
{
    const auto s = pareto_sample(250, 0.5, 0.9, 77);
    for (double a : {0.2, 1.0})
        for (double g : {0.1, 0.4, 1.3, 4.0}) {
            const TailConfig c{60, a};
            const double h = 1e-6 * g;
            const double d = (mdpd_objective(g + h, s, c) - mdpd_objective(g - h, s, c)) / (2 * h);
            const double expect = (1.0 + a) * std::pow(g, -(2.0 + a)) * mdpd_residual(g, s, c);
            EXPECT_NEAR(d, expect, 1e-6 * (1.0 + std::fabs(expect)));
        }
}

TEST(MdpdObjective, EmptyWeightsAndIndependentForm)
{
    const auto s0 = make_sample({1, 2, 4, 8}, {1, 0, 0, 0});
    const double a = 0.5, g = 0.7;
    EXPECT_NEAR(mdpd_objective(g, s0, {3, a}), std::pow(g, -a) / (1.0 + a + a * g), 1e-15);

    const auto s = make_sample({1.0, 1.3, 2.2, 2.9, 4.1, 9.5}, {1, 0, 1, 1, 0, 1});
    for (double gg : {0.35, 1.6})
        for (double al : {0.25, 1.0})
            EXPECT_NEAR(mdpd_objective(gg, s, {4, al}), objective_oracle(gg, s, 4, al), 1e-13);
    EXPECT_THROW(mdpd_objective(1.0, s, {4, 0.0}), std::invalid_argument);
    EXPECT_THROW(mdpd_objective(-1.0, s, {4, 0.5}), std::invalid_argument);
}
