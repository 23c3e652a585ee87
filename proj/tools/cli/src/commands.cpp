#include "censtail_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "censtail/distributions.hpp"
#include "censtail/random.hpp"
#include "censtail_cli/format.hpp"

namespace censtail::cli {

namespace {

void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw user_error("cannot write " + p.string());
    f << text;
}

std::string cell(double v)
{
    return std::isnan(v) ? std::string() : format_double(v);
}

}  // namespace

void cmd_estimate(const DatasetFile& data, const EstimateOptions& opt, std::ostream& out)
{
    const OrderedSample sample = order_sample(data.observations());
    const std::size_t n = sample.size();
    if (opt.k_step < 1 || opt.k_min < 1)
        throw user_error("k-min and k-step must be positive");
    std::size_t k_max;
    if (opt.k_max) {
        k_max = *opt.k_max;
        if (k_max >= n)
            throw user_error("k = " + std::to_string(k_max) + " must be smaller than n = " +
                             std::to_string(n));
    } else {
        k_max = std::min<std::size_t>(n - 1, 500);
    }
    if (opt.k_min > k_max)
        throw user_error("k = " + std::to_string(opt.k_min) + " must be smaller than n = " +
                         std::to_string(n) + " and not above k-max");
    for (double a : opt.alphas)
        if (!(a >= 0.0))
            throw user_error("alpha must be nonnegative");

    out << "k,alpha,method,gamma1_hat,residual";
    if (opt.ci_level)
        out << ",ci_lo,ci_hi";
    out << '\n';
    const std::string ci_blank = opt.ci_level ? ",," : "";

    for (std::size_t k = opt.k_min; k <= k_max; k += opt.k_step) {
        for (double a : opt.alphas) {
            const Method m = a == 0.0 ? Method::MNS : Method::MDPD;
            out << k << ',' << format_double(a) << ',' << method_name(m) << ',';
            try {
                const auto e = mdpd_estimate(sample, {k, a}, opt.solver);
                out << format_double(e.gamma1_hat) << ','
                    << (m == Method::MDPD ? format_double(e.diagnostics.residual) : "");
                if (opt.ci_level) {
                    std::string lo, hi;
                    const double ph = censored_proportion(sample, k);
                    if (m == Method::MDPD && ph > 0.5 && ph < 1.0) {
                        const ModelParams plug{e.gamma1_hat, gamma2_from_p(e.gamma1_hat, ph)};
                        const auto ci = asymptotic_ci(e, plug, *opt.ci_level);
                        lo = format_double(ci.lo);
                        hi = format_double(ci.hi);
                    }
                    out << ',' << lo << ',' << hi;
                }
            } catch (const estimation_error&) {
                out << ',' << ci_blank;
            }
            out << '\n';
        }
        if (opt.competitors) {
            const std::pair<Method, double (*)(const OrderedSample&, std::size_t)> comp[] = {
                {Method::Hill, hill_gamma}, {Method::EFG, efg_estimator},
                {Method::Worms, worms_estimator}};
            for (const auto& [m, f] : comp) {
                out << k << ",0," << method_name(m) << ',';
                try {
                    out << format_double(f(sample, k));
                } catch (const estimation_error&) {
                }
                out << ',' << ci_blank << '\n';
            }
        }
        if (k_max - k < opt.k_step)
            break;
    }
}

void cmd_contaminate(const DatasetFile& data, const OutlierInjection& table, std::ostream& out)
{
    write_dataset(out, contaminate(data, table));
}

std::string sweep_csv(const SweepResult& result)
{
    std::ostringstream o;
    o << "k,alpha,abs_bias,mse,n_failures\n";
    for (const auto& r : result.rows)
        o << r.k << ',' << format_double(r.alpha) << ',' << format_double(r.abs_bias) << ','
          << format_double(r.mse) << ',' << r.n_failures << '\n';
    return o.str();
}

std::string plot_csv(const SweepResult& result, const std::vector<double>& alphas,
                     const std::string& metric)
{
    const bool bias = metric == "bias";
    std::ostringstream o;
    o << 'k';
    for (double a : alphas)
        o << ",alpha=" << format_double(a);
    o << '\n';
    const std::size_t na = alphas.size();
    for (std::size_t i = 0; i + na <= result.rows.size(); i += na) {
        o << result.rows[i].k;
        for (std::size_t j = 0; j < na; ++j) {
            const auto& r = result.rows[i + j];
            o << ',' << format_double(bias ? r.abs_bias : r.mse);
        }
        o << '\n';
    }
    return o.str();
}

std::string epsilon_tag(double epsilon)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", epsilon);
    return buf;
}

SweepOutputs cmd_sweep(const SweepSpec& spec, const std::string& out_dir, bool emit_svg)
{
    const SweepResult res = run_sweep(spec);
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw user_error("cannot create output directory " + out_dir);

    const std::string tag = epsilon_tag(spec.contamination.epsilon);
    SweepOutputs o;
    o.main_csv = (dir / "sweep.csv").string();
    o.bias_csv = (dir / ("bias_eps" + tag + ".csv")).string();
    o.mse_csv = (dir / ("mse_eps" + tag + ".csv")).string();
    write_file(o.main_csv, sweep_csv(res));
    write_file(o.bias_csv, plot_csv(res, spec.alphas, "bias"));
    write_file(o.mse_csv, plot_csv(res, spec.alphas, "mse"));
    if (emit_svg) {
        for (const std::string metric : {"bias", "mse"}) {
            const auto path = (dir / (metric + "_eps" + tag + ".svg")).string();
            const std::string title = (metric == "bias" ? "Bias" : "MSE") +
                                      std::string(", epsilon = ") + tag;
            write_file(path, plot_svg(res, spec.alphas, metric, title));
            o.svgs.push_back(path);
        }
    }
    return o;
}

void cmd_constants(const ConstantsOptions& opt, std::ostream& out, std::ostream& diag)
{
    if (!(opt.alpha > 0.0))
        throw user_error("alpha must be positive");
    if (!(opt.gamma1 > 0.0))
        throw user_error("gamma1 must be positive");
    if (!(opt.p > 0.0 && opt.p < 1.0))
        throw user_error("p must lie in (0, 1)");
    if (!(opt.p > 0.5))
        throw user_error("variance formula requires p > 1/2");
    if (opt.tau1 > 0.0)
        throw user_error("tau1 must be nonpositive");

    const ModelParams model{opt.gamma1, gamma2_from_p(opt.gamma1, opt.p), 1.0, opt.tau1};
    const AsymptoticConstants c = asymptotic_constants(opt.alpha, model);
    double mc = std::nan(""), se = std::nan("");
    if (opt.monte_carlo) {
        const auto r = sigma_squared_mc(opt.alpha, model.gamma1, model.gamma2, opt.oracle);
        mc = r.estimate;
        se = r.stderr_;
    }

    out << "alpha,gamma1,gamma2,p,tau1,eta_star,mu,sigma2,sigma2_mc,mc_stderr";
    if (opt.lambda)
        out << ",lambda,lambda_mu";
    out << '\n'
        << format_double(opt.alpha) << ',' << format_double(model.gamma1) << ','
        << format_double(model.gamma2) << ',' << format_double(opt.p) << ','
        << format_double(opt.tau1) << ',' << format_double(c.eta_star) << ','
        << format_double(c.mu) << ',' << format_double(c.sigma2) << ',' << cell(mc) << ','
        << cell(se);
    if (opt.lambda)
        out << ',' << format_double(*opt.lambda) << ',' << format_double(*opt.lambda * c.mu);
    out << '\n';

    if (std::isfinite(c.mu_printed) &&
        std::fabs(c.mu_printed - c.mu) > 1e-6 * std::max(std::fabs(c.mu), 1e-300))
        diag << "note: mu integral " << format_double(c.mu) << " differs from the alternative "
             << "closed form " << format_double(c.mu_printed) << '\n';
    if (std::fabs(c.sigma2_printed - c.sigma2) > 1e-6 * c.sigma2)
        diag << "note: sigma2 " << format_double(c.sigma2) << " differs from the alternative "
             << "kernel form " << format_double(c.sigma2_printed) << '\n';
}

DatasetFile generate_dataset(const GenerateOptions& opt)
{
    if (opt.n < 2)
        throw user_error("n must be at least 2");
    if (!(opt.scale > 0.0))
        throw user_error("scale must be positive");
    ModelParams m;
    try {
        m = {opt.gamma1, gamma2_from_p(opt.gamma1, opt.p), opt.eta, -1.0};
    } catch (const std::exception& e) {
        throw user_error(e.what());
    }
    const auto obs = sample_contaminated_censored(opt.n, m, {}, opt.seed, 0);
    DatasetFile d;
    d.rows.reserve(obs.size());
    for (const auto& o : obs) {
        const double days = std::max(1.0, std::round(o.z * opt.scale));
        d.rows.push_back({days, o.delta, format_double(days)});
    }
    return d;
}

}  // namespace censtail::cli
