#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "censtail_cli/commands.hpp"
#include "censtail_cli/format.hpp"

namespace censtail::cli {

namespace {

constexpr const char* kColors[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                   "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

std::string plot_svg(const SweepResult& result, const std::vector<double>& alphas,
                     const std::string& metric, const std::string& title)
{
    const bool bias = metric == "bias";
    const std::size_t na = alphas.size();
    const double W = 640, H = 400, L = 70, R = 130, T = 40, B = 50;

    double kmin = 1e300, kmax = -1e300, ymax = 0.0;
    for (const auto& r : result.rows) {
        const double v = bias ? r.abs_bias : r.mse;
        kmin = std::min(kmin, static_cast<double>(r.k));
        kmax = std::max(kmax, static_cast<double>(r.k));
        if (std::isfinite(v))
            ymax = std::max(ymax, v);
    }
    if (!(kmax > kmin))
        kmax = kmin + 1.0;
    if (!(ymax > 0.0))
        ymax = 1.0;
    ymax *= 1.05;
    auto sx = [&](double k) { return L + (k - kmin) / (kmax - kmin) * (W - L - R); };
    auto sy = [&](double y) { return H - B - y / ymax * (H - T - B); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(W / 2) << "\" y=\"22\" text-anchor=\"middle\">" << title
      << "</text>\n"
      << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double y = ymax * i / 4.0, k = kmin + (kmax - kmin) * i / 4.0;
        o << "<text x=\"" << L - 6 << "\" y=\"" << num(sy(y) + 4)
          << "\" text-anchor=\"end\">" << tick(y) << "</text>\n"
          << "<text x=\"" << num(sx(k)) << "\" y=\"" << H - B + 18
          << "\" text-anchor=\"middle\">" << tick(k) << "</text>\n";
    }
    o << "<text x=\"" << num((L + W - R) / 2) << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\">k</text>\n";

    for (std::size_t j = 0; j < na; ++j) {
        const char* col = kColors[j % (sizeof kColors / sizeof *kColors)];
        o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = j; i < result.rows.size(); i += na) {
            const auto& r = result.rows[i];
            const double v = bias ? r.abs_bias : r.mse;
            if (std::isfinite(v))
                o << num(sx(static_cast<double>(r.k))) << ',' << num(sy(v)) << ' ';
        }
        o << "\"/>\n";
        const double ly = T + 18.0 * static_cast<double>(j);
        o << "<line x1=\"" << W - R + 12 << "\" y1=\"" << num(ly) << "\" x2=\"" << W - R + 36
          << "\" y2=\"" << num(ly) << "\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << W - R + 42 << "\" y=\"" << num(ly + 4) << "\">alpha = "
          << format_double(alphas[j]) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace censtail::cli
