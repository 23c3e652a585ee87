#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "censtail_cli/commands.hpp"
#include "censtail_cli/dataset.hpp"
#include "censtail_cli/format.hpp"
#include "censtail_cli/sweep_config.hpp"
#include "test_support.hpp"

using namespace censtail;
using namespace censtail::cli;
namespace fs = std::filesystem;

namespace {

DatasetFile parse(const std::string& text)
{
    std::istringstream in(text);
    return read_dataset(in);
}

std::string write(const DatasetFile& d)
{
    std::ostringstream o;
    write_dataset(o, d);
    return o.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

DatasetFile pareto_dataset(std::size_t n, double g1, double g2, std::uint64_t seed)
{
    DatasetFile d;
    for (const auto& o : censtail::testing::pareto_censored(n, g1, g2, seed))
        d.rows.push_back({o.z, o.delta, format_double(o.z)});
    return d;
}

fs::path scratch_dir(const std::string& name)
{
    auto p = fs::temp_directory_path() / ("censtail_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST(Format, ShortestRoundTrip)
{
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(std::log(2.0)), "0.6931471805599453");
    EXPECT_EQ(format_double(std::nan("")), "NaN");
    EXPECT_EQ(format_double(2.0), "2");
    for (double v : {1.0 / 3.0, 1e-300, 123456.789, -2.5e17})
        EXPECT_EQ(parse_double(format_double(v), "v"), v);
    EXPECT_THROW(parse_double("1.5x", "v"), user_error);
    EXPECT_THROW(parse_int("7.0", "v"), user_error);
}

TEST(Dataset, RoundTripIsVerbatim)
{
    const std::string text = "time,status\n2.50,1\n7,0\n1e3,1\n";
    const auto d = parse(text);
    ASSERT_EQ(d.rows.size(), 3u);
    EXPECT_EQ(d.rows[2].time, 1000.0);
    EXPECT_EQ(d.rows[1].status, 0);
    EXPECT_EQ(write(d), text);
    EXPECT_EQ(write(parse(write(d))), text);
}

TEST(Dataset, ErrorsCarryLineNumbers)
{
    auto message = [](const std::string& text) {
        try {
            parse(text);
        } catch (const user_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message("time,status\n2,1\n-1,1\n4,1\n"), "invalid observation at line 3");
    EXPECT_EQ(message("time,status\n2,1\n0,1\n"), "invalid observation at line 3");
    EXPECT_EQ(message("time,status\n2,2\n"), "invalid observation at line 2");
    EXPECT_EQ(message("time,status\nabc,1\n"), "invalid observation at line 2");
    EXPECT_EQ(message("t,s\n2,1\n"), "expected header 'time,status' at line 1");
    EXPECT_EQ(message("time,status\n"), "empty sample");
}

TEST(Contaminate, DefaultTableOnTenOriginals)
{
    DatasetFile d;
    const auto table = default_injection();
    ASSERT_EQ(table.size(), 10u);
    for (std::size_t i = 0; i < table.size(); ++i) {
        d.rows.push_back({table[i].original, 1, format_double(table[i].original)});
        d.rows.push_back({10.0 + i, 0, format_double(10.0 + i)});
    }
    d.rows.push_back({3000.0, 0, "3000"});   // censored, must be left alone
    const auto out = contaminate(d, table);
    for (std::size_t i = 0; i < table.size(); ++i) {
        EXPECT_EQ(out.rows[2 * i].time, table[i].replacement);
        EXPECT_EQ(out.rows[2 * i].time_text, table[i].replacement_text);
        EXPECT_EQ(out.rows[2 * i + 1].time, d.rows[2 * i + 1].time);
    }
    EXPECT_EQ(out.rows.back().time, 3000.0);
}

TEST(Contaminate, ChangesExactlyMRowsAndKeepsStatus)
{
    const auto d = pareto_dataset(300, 0.5, 1.0, 3);
    const OutlierInjection table{{0, 1e6, "1000000"}, {0, 5e5, "500000"}, {0, 2e6, "2000000"}};
    ContaminationReport rep;
    const auto out = contaminate(d, table, &rep);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        EXPECT_EQ(out.rows[i].status, d.rows[i].status);
        if (out.rows[i].time != d.rows[i].time)
            ++changed;
    }
    EXPECT_EQ(changed, 3u);
    ASSERT_EQ(rep.replaced_rows.size(), 3u);
    // largest uncensored gets the largest replacement
    EXPECT_EQ(out.rows[rep.replaced_rows[0]].time, 2e6);
    EXPECT_EQ(out.rows[rep.replaced_rows[2]].time, 5e5);
    EXPECT_GE(rep.replaced_times[0], rep.replaced_times[1]);
    EXPECT_GE(rep.replaced_times[1], rep.replaced_times[2]);
}

TEST(Contaminate, EmptyTableAndSingleDoubling)
{
    const std::string text = "time,status\n3,1\n9,0\n5,1\n";
    const auto d = parse(text);
    EXPECT_EQ(write(contaminate(d, {})), text);
    const auto c = contaminate(d, {{5, 10, "10"}});
    EXPECT_EQ(write(c), "time,status\n3,1\n9,0\n10,1\n");
    EXPECT_THROW(contaminate(d, {{0, 1, "1"}, {0, 2, "2"}, {0, 3, "3"}}), user_error);
}

TEST(Contaminate, InjectionFile)
{
    std::istringstream good("original,replacement\n5,10\n3,6.5\n");
    const auto t = read_injection(good);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[1].replacement_text, "6.5");
    std::istringstream bad("original,replacement\n5,10\n3,-1\n");
    try {
        read_injection(bad);
        FAIL();
    } catch (const user_error& e) {
        EXPECT_STREQ(e.what(), "invalid replacement at line 3");
    }
}

TEST(SweepConfig, ParsesKeysAndRanges)
{
    std::istringstream in("# comment\nn = 500\nreplicates = 7\ngamma1 = 0.5\np = 0.55\n"
                          "epsilon = 0.15\ntheta1 = 0.8\nalphas = 0, 0.2\nk = 10:50:20\n"
                          "seed = 9\n");
    const auto s = parse_sweep_config(in);
    EXPECT_EQ(s.n, 500u);
    EXPECT_EQ(s.replicates, 7u);
    EXPECT_DOUBLE_EQ(s.model.p(), 0.55);
    EXPECT_EQ(s.contamination.theta1, 0.8);
    EXPECT_EQ(s.alphas, (std::vector<double>{0.0, 0.2}));
    EXPECT_EQ(s.k_grid, (std::vector<std::size_t>{10, 30, 50}));
    EXPECT_EQ(s.seed, 9u);

    std::istringstream again(write_sweep_config(s));
    const auto t = parse_sweep_config(again);
    EXPECT_EQ(t.k_grid, s.k_grid);
    EXPECT_EQ(t.model.gamma2, s.model.gamma2);
}

TEST(SweepConfig, RejectsUnknownKeyByName)
{
    std::istringstream in("n = 50\ngamma3 = 1\n");
    try {
        parse_sweep_config(in);
        FAIL();
    } catch (const user_error& e) {
        EXPECT_STREQ(e.what(), "unknown config key 'gamma3'");
    }
    std::istringstream both("gamma2 = 0.7\np = 0.5\n");
    EXPECT_THROW(parse_sweep_config(both), user_error);
}

TEST(Estimate, ToyK1)
{
    const auto d = parse("time,status\n1,0\n2,1\n4,1\n");
    std::ostringstream o;
    EstimateOptions opt;
    opt.k_min = 1;
    opt.k_max = 1;
    opt.alphas = {0.0};
    cmd_estimate(d, opt, o);
    EXPECT_EQ(o.str(), "k,alpha,method,gamma1_hat,residual\n1,0,MNS,0.6931471805599453,\n");
}

TEST(Estimate, RejectsKAtLeastN)
{
    const auto d = parse("time,status\n1,0\n2,1\n4,1\n");
    std::ostringstream o;
    EstimateOptions opt;
    opt.k_min = 1;
    opt.k_max = 3;
    EXPECT_THROW(cmd_estimate(d, opt, o), user_error);
}

TEST(Estimate, SyntheticParetoRecovered)
{
    const auto d = pareto_dataset(1000, 0.5, 1.5, 21);
    EstimateOptions opt;
    opt.k_min = 100;
    opt.k_max = 100;
    opt.alphas = {0.0, 0.1};
    opt.competitors = true;
    opt.ci_level = 0.95;
    std::ostringstream o;
    cmd_estimate(d, opt, o);
    const auto rows = csv_rows(o.str());
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].size(), 7u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 7u) << o.str();
        EXPECT_NEAR(parse_double(rows[i][3], "g"), 0.5, 0.15) << rows[i][2];
    }
    EXPECT_EQ(rows[2][2], "MDPD");
    const double lo = parse_double(rows[2][5], "lo"), hi = parse_double(rows[2][6], "hi");
    EXPECT_LT(lo, parse_double(rows[2][3], "g"));
    EXPECT_GT(hi, parse_double(rows[2][3], "g"));

    // CSV round-trip: values survive text exactly.
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_EQ(format_double(parse_double(rows[i][3], "g")), rows[i][3]);
}

TEST(Constants, ClosedFormAndMonteCarlo)
{
    ConstantsOptions opt;
    opt.alpha = 1.0;
    opt.gamma1 = 1.0;
    opt.p = 0.6;
    opt.oracle.replicates = 4000;
    opt.oracle.grid_points = 2048;
    std::ostringstream o, diag;
    cmd_constants(opt, o, diag);
    const auto rows = csv_rows(o.str());
    ASSERT_EQ(rows.size(), 2u);
    ASSERT_EQ(rows[1].size(), 10u);
    EXPECT_NEAR(parse_double(rows[1][5], "eta"), 10.0 / 27.0, 1e-10);
    const double s2 = parse_double(rows[1][7], "s2");
    const double mc = parse_double(rows[1][8], "mc");
    const double se = parse_double(rows[1][9], "se");
    EXPECT_LT(std::fabs(s2 - mc), 3.0 * se);

    opt.p = 0.5;
    EXPECT_THROW(cmd_constants(opt, o, diag), user_error);
}

TEST(Sweep, OutputsAndByteIdentity)
{
    SweepSpec s;
    s.n = 400;
    s.replicates = 20;
    s.model = ModelParams::from_p(0.5, 0.55, 0.25);
    s.contamination = {0.4, 0.8};
    s.alphas = {0.0, 0.1, 0.3, 0.5};
    s.k_grid = {20, 60, 100};
    s.seed = 5;
    s.threads = 1;
    const auto a = scratch_dir("sweep_a");
    const auto b = scratch_dir("sweep_b");
    const auto outs = cmd_sweep(s, a.string(), true);
    s.threads = 4;
    cmd_sweep(s, b.string(), true);

    for (const char* f : {"sweep.csv", "bias_eps0.40.csv", "mse_eps0.40.csv"}) {
        ASSERT_TRUE(fs::exists(a / f)) << f;
        EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    }
    EXPECT_FALSE(outs.svgs.empty());
    const auto bias = csv_rows(slurp(a / "bias_eps0.40.csv"));
    ASSERT_EQ(bias.size(), 4u);
    EXPECT_EQ(bias[0], (std::vector<std::string>{"k", "alpha=0", "alpha=0.1", "alpha=0.3",
                                                 "alpha=0.5"}));
    const auto main = csv_rows(slurp(a / "sweep.csv"));
    EXPECT_EQ(main[0], (std::vector<std::string>{"k", "alpha", "abs_bias", "mse", "n_failures"}));
    EXPECT_EQ(main.size(), 1u + 3u * 4u);
}

TEST(Binary, ExitCodes)
{
    const auto dir = scratch_dir("binary");
    const auto bad = dir / "bad.csv";
    std::ofstream(bad) << "time,status\n2,1\n-1,1\n4,1\n";
    const auto good = dir / "good.csv";
    std::ofstream(good) << "time,status\n1,0\n2,1\n4,1\n";
    auto run = [&](const std::string& args) {
        const std::string cmd = std::string(CENSTAIL_BINARY) + " " + args + " > " +
                                (dir / "out.txt").string() + " 2>&1";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    EXPECT_EQ(run("estimate " + bad.string() + " --k-min 1 --k-max 1"), 1);
    EXPECT_NE(slurp(dir / "out.txt").find("invalid observation at line 3"), std::string::npos);
    EXPECT_EQ(run("estimate " + good.string() + " --k-min 1 --k-max 1"), 0);
    EXPECT_EQ(run("estimate " + good.string() + " --k-min 1 --k-max 3"), 1);
    EXPECT_EQ(run("constants --alpha 1 --gamma1 1 --p 0.5"), 1);
}
