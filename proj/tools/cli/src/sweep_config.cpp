#include "censtail_cli/sweep_config.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "censtail/distributions.hpp"
#include "censtail_cli/dataset.hpp"
#include "censtail_cli/format.hpp"

namespace censtail::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(trim(cur));
    return out;
}

std::vector<std::size_t> parse_k_grid(const std::string& v)
{
    std::vector<std::size_t> ks;
    if (v.find(':') != std::string::npos) {
        const auto parts = split(v, ':');
        if (parts.size() != 3)
            throw user_error("k range must be lo:hi:step");
        const long long lo = parse_int(parts[0], "k"), hi = parse_int(parts[1], "k"),
                        st = parse_int(parts[2], "k");
        if (lo < 1 || hi < lo || st < 1)
            throw user_error("invalid k range '" + v + "'");
        for (long long k = lo; k <= hi; k += st)
            ks.push_back(static_cast<std::size_t>(k));
        return ks;
    }
    for (const auto& t : split(v, ',')) {
        const long long k = parse_int(t, "k");
        if (k < 1)
            throw user_error("k must be positive");
        ks.push_back(static_cast<std::size_t>(k));
    }
    return ks;
}

}  // namespace

SweepSpec parse_sweep_config(std::istream& in)
{
    SweepSpec s;
    s.model.eta = 0.25;
    s.k_grid = parse_k_grid("20:400:20");
    std::optional<double> gamma2, p;
    double gamma1 = 0.3;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        if (trim(line).empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw user_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "n") {
            const long long v = parse_int(val, key);
            if (v < 10)
                throw user_error("n must be at least 10");
            s.n = static_cast<std::size_t>(v);
        } else if (key == "replicates") {
            const long long v = parse_int(val, key);
            if (v < 1)
                throw user_error("replicates must be at least 1");
            s.replicates = static_cast<std::size_t>(v);
        } else if (key == "gamma1") {
            gamma1 = parse_double(val, key);
        } else if (key == "gamma2") {
            gamma2 = parse_double(val, key);
        } else if (key == "p") {
            p = parse_double(val, key);
        } else if (key == "eta") {
            s.model.eta = parse_double(val, key);
        } else if (key == "tau1") {
            s.model.tau1 = parse_double(val, key);
        } else if (key == "epsilon") {
            s.contamination.epsilon = parse_double(val, key);
        } else if (key == "theta1") {
            s.contamination.theta1 = parse_double(val, key);
        } else if (key == "alphas") {
            s.alphas.clear();
            for (const auto& t : split(val, ','))
                s.alphas.push_back(parse_double(t, key));
        } else if (key == "k") {
            s.k_grid = parse_k_grid(val);
        } else if (key == "seed") {
            const long long v = parse_int(val, key);
            if (v < 0)
                throw user_error("seed must be nonnegative");
            s.seed = static_cast<std::uint64_t>(v);
        } else if (key == "threads") {
            s.threads = static_cast<int>(parse_int(val, key));
        } else {
            throw user_error("unknown config key '" + key + "'");
        }
    }

    if (gamma2 && p)
        throw user_error("config sets both gamma2 and p");
    if (!(gamma1 > 0.0))
        throw user_error("gamma1 must be positive");
    s.model.gamma1 = gamma1;
    try {
        s.model.gamma2 = gamma2 ? *gamma2 : gamma2_from_p(gamma1, p.value_or(0.55));
        validate(s);
    } catch (const std::exception& e) {
        throw user_error(e.what());
    }
    return s;
}

SweepSpec read_sweep_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw user_error("cannot open " + path);
    return parse_sweep_config(f);
}

std::string write_sweep_config(const SweepSpec& s)
{
    std::ostringstream o;
    o << "n = " << s.n << "\nreplicates = " << s.replicates
      << "\ngamma1 = " << format_double(s.model.gamma1)
      << "\ngamma2 = " << format_double(s.model.gamma2) << "\neta = " << format_double(s.model.eta)
      << "\ntau1 = " << format_double(s.model.tau1)
      << "\nepsilon = " << format_double(s.contamination.epsilon)
      << "\ntheta1 = " << format_double(s.contamination.theta1) << "\nalphas = ";
    for (std::size_t i = 0; i < s.alphas.size(); ++i)
        o << (i ? ", " : "") << format_double(s.alphas[i]);
    o << "\nk = ";
    for (std::size_t i = 0; i < s.k_grid.size(); ++i)
        o << (i ? ", " : "") << s.k_grid[i];
    o << "\nseed = " << s.seed << "\nthreads = " << s.threads << '\n';
    return o.str();
}

}  // namespace censtail::cli
