#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "censtail/asymptotics.hpp"
#include "censtail/estimators.hpp"
#include "censtail/simulation.hpp"
#include "censtail_cli/dataset.hpp"

namespace censtail::cli {

struct EstimateOptions {
    std::size_t k_min = 10;
    std::optional<std::size_t> k_max;   // default min(n - 1, 500)
    std::size_t k_step = 10;
    std::vector<double> alphas{0.0};
    SolverOptions solver;
    bool competitors = false;           // also emit Hill, EFG and Worms rows
    std::optional<double> ci_level;     // adds ci_lo, ci_hi columns to MDPD rows
};

// CSV: k,alpha,method,gamma1_hat,residual[,ci_lo,ci_hi]; failed estimates
// leave the value cells empty.
void cmd_estimate(const DatasetFile& data, const EstimateOptions& opt, std::ostream& out);

void cmd_contaminate(const DatasetFile& data, const OutlierInjection& table, std::ostream& out);

struct SweepOutputs {
    std::string main_csv;
    std::string bias_csv;
    std::string mse_csv;
    std::vector<std::string> svgs;
};

std::string sweep_csv(const SweepResult& result);
// Wide layout: k column plus one column per alpha; metric is "bias" or "mse".
std::string plot_csv(const SweepResult& result, const std::vector<double>& alphas,
                     const std::string& metric);
std::string plot_svg(const SweepResult& result, const std::vector<double>& alphas,
                     const std::string& metric, const std::string& title);
std::string epsilon_tag(double epsilon);   // "0.40"

// Writes sweep.csv, bias_eps<e>.csv and mse_eps<e>.csv (plus .svg files when
// requested) into out_dir.
SweepOutputs cmd_sweep(const SweepSpec& spec, const std::string& out_dir, bool emit_svg);

struct ConstantsOptions {
    double alpha = 0.1;
    double gamma1 = 0.3;
    double p = 0.7;
    double tau1 = -1.0;
    std::optional<double> lambda;
    bool monte_carlo = true;
    GaussianOracleConfig oracle;
};

// Header plus one row:
// alpha,gamma1,gamma2,p,tau1,eta_star,mu,sigma2,sigma2_mc,mc_stderr[,lambda,lambda_mu]
// Discrepancies against the alternative closed forms go to `diag`.
void cmd_constants(const ConstantsOptions& opt, std::ostream& out, std::ostream& diag);

struct GenerateOptions {
    std::size_t n = 2754;
    double gamma1 = 0.3;
    double p = 0.6;
    double eta = 0.25;
    double scale = 400.0;   // days per unit of the unscaled model
    std::uint64_t seed = 1991;
};

// Synthetic stand-in for a survival-time dataset: Burr lifetimes and
// Frechet censoring times scaled to days and rounded to whole days.
DatasetFile generate_dataset(const GenerateOptions& opt);

}  // namespace censtail::cli
