#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "censtail/estimators.hpp"
#include "censtail_cli/commands.hpp"
#include "censtail_cli/sweep_config.hpp"

using namespace censtail;
using namespace censtail::cli;

namespace {

void add_solver_flags(CLI::App* cmd, SolverOptions& s, std::vector<double>& domain)
{
    cmd->add_option("--tol", s.tol_abs, "absolute residual tolerance of the root solver")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--domain", domain, "root search domain LO HI")->expected(2);
    cmd->add_option("--grid-points", s.grid_points, "bracket scan grid size")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--max-iter", s.max_iter, "solver iteration cap")->check(CLI::PositiveNumber);
}

void apply_domain(SolverOptions& s, const std::vector<double>& domain)
{
    if (domain.empty())
        return;
    if (!(domain[0] > 0.0 && domain[1] > domain[0]))
        throw user_error("--domain needs 0 < LO < HI");
    s.domain_lo = domain[0];
    s.domain_hi = domain[1];
}

DatasetFile load(const std::string& path)
{
    if (path == "-")
        return read_dataset(std::cin);
    return read_dataset_file(path);
}

std::ostream& output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path, std::ios::binary);
    if (!file)
        throw user_error("cannot write " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Robust tail-index estimation for randomly right-censored data"};
    app.require_subcommand(1);

    // estimate
    std::string est_file, est_out;
    EstimateOptions est;
    std::vector<double> est_domain;
    std::size_t est_kmax = 0;
    double est_ci = 0.0;
    auto* c_est = app.add_subcommand("estimate", "tail-index estimates over a range of k");
    c_est->add_option("file", est_file, "dataset CSV with header time,status ('-' = stdin)")
        ->required();
    c_est->add_option("--k-min", est.k_min, "smallest k");
    auto* o_kmax = c_est->add_option("--k-max", est_kmax, "largest k (default min(n-1, 500))");
    c_est->add_option("--k-step", est.k_step, "k increment");
    c_est->add_option("--alpha", est.alphas, "tuning parameter; repeatable")->take_all();
    c_est->add_flag("--competitors", est.competitors, "add Hill, EFG and Worms rows");
    auto* o_ci = c_est->add_option("--ci", est_ci, "asymptotic confidence level for MDPD rows")
                     ->check(CLI::Range(0.0, 1.0));
    c_est->add_option("-o,--output", est_out, "output file (default stdout)");
    add_solver_flags(c_est, est.solver, est_domain);

    // contaminate
    std::string con_file, con_table, con_out;
    auto* c_con = app.add_subcommand("contaminate", "replace the largest uncensored times by outliers");
    c_con->add_option("file", con_file, "dataset CSV ('-' = stdin)")->required();
    c_con->add_option("--table", con_table,
                      "CSV with header original,replacement (default: built-in ten outliers)");
    c_con->add_option("-o,--output", con_out, "output file (default stdout)");

    // sweep
    std::string sw_config, sw_dir = ".";
    std::uint64_t sw_seed = 0;
    std::size_t sw_reps = 0;
    int sw_threads = 0;
    bool sw_full = false, sw_svg = false;
    SolverOptions sw_solver;
    std::vector<double> sw_domain;
    auto* c_sw = app.add_subcommand("sweep", "Monte Carlo bias/MSE sweep over k and alpha");
    c_sw->add_option("config", sw_config, "key = value configuration file")->required();
    c_sw->add_option("--output-dir", sw_dir, "directory receiving the CSV files");
    auto* o_seed = c_sw->add_option("--seed", sw_seed, "override the config seed");
    auto* o_reps = c_sw->add_option("--replicates", sw_reps, "override the replicate count")
                       ->check(CLI::PositiveNumber);
    c_sw->add_flag("--full-scale", sw_full, "use 2000 replicates");
    auto* o_thr = c_sw->add_option("--threads", sw_threads, "worker threads (0 = all cores)")
                      ->check(CLI::NonNegativeNumber);
    c_sw->add_flag("--emit-svg", sw_svg, "also write SVG plots");
    add_solver_flags(c_sw, sw_solver, sw_domain);

    // constants
    ConstantsOptions cst;
    double cst_lambda = 0.0;
    bool cst_no_mc = false;
    auto* c_cst = app.add_subcommand("constants", "asymptotic bias and variance constants");
    c_cst->add_option("--alpha", cst.alpha, "tuning parameter")->required();
    c_cst->add_option("--gamma1", cst.gamma1, "tail index")->required();
    c_cst->add_option("--p", cst.p, "upper uncensored proportion")->required();
    c_cst->add_option("--tau1", cst.tau1, "second-order parameter (<= 0)");
    auto* o_lambda = c_cst->add_option("--lambda", cst_lambda, "limit of sqrt(k) A1; adds lambda*mu");
    c_cst->add_option("--replicates", cst.oracle.replicates, "Monte Carlo replicates")
        ->check(CLI::Range(1000, 100000000));
    c_cst->add_option("--grid-points", cst.oracle.grid_points, "Monte Carlo grid size")
        ->check(CLI::Range(1000, 10000000));
    c_cst->add_option("--seed", cst.oracle.seed, "Monte Carlo seed");
    c_cst->add_option("--threads", cst.oracle.threads, "worker threads (0 = all cores)");
    c_cst->add_flag("--no-mc", cst_no_mc, "skip the Monte Carlo cross-check");

    // generate
    GenerateOptions gen;
    std::string gen_out;
    auto* c_gen = app.add_subcommand("generate", "write a synthetic survival dataset");
    c_gen->add_option("--n", gen.n, "number of patients");
    c_gen->add_option("--gamma1", gen.gamma1, "lifetime tail index");
    c_gen->add_option("--p", gen.p, "upper uncensored proportion");
    c_gen->add_option("--eta", gen.eta, "Burr shape");
    c_gen->add_option("--scale", gen.scale, "days per model unit");
    c_gen->add_option("--seed", gen.seed, "random seed");
    c_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        std::ofstream file;
        if (*c_est) {
            if (*o_kmax)
                est.k_max = est_kmax;
            if (*o_ci)
                est.ci_level = est_ci;
            apply_domain(est.solver, est_domain);
            auto data = load(est_file);
            cmd_estimate(data, est, output(est_out, file));
        } else if (*c_con) {
            auto data = load(con_file);
            const auto table = con_table.empty() ? default_injection() : read_injection_file(con_table);
            cmd_contaminate(data, table, output(con_out, file));
        } else if (*c_sw) {
            SweepSpec spec = read_sweep_config_file(sw_config);
            if (sw_full)
                spec.replicates = 2000;
            if (*o_reps)
                spec.replicates = sw_reps;
            if (*o_seed)
                spec.seed = sw_seed;
            if (*o_thr)
                spec.threads = sw_threads;
            apply_domain(sw_solver, sw_domain);
            spec.solver = sw_solver;
            const auto outs = cmd_sweep(spec, sw_dir, sw_svg);
            std::cerr << "wrote " << outs.main_csv << ", " << outs.bias_csv << ", " << outs.mse_csv
                      << '\n';
        } else if (*c_cst) {
            cst.monte_carlo = !cst_no_mc;
            if (*o_lambda)
                cst.lambda = cst_lambda;
            cmd_constants(cst, std::cout, std::cerr);
        } else if (*c_gen) {
            write_dataset(output(gen_out, file), generate_dataset(gen));
        }
    } catch (const user_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const estimation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
