#include "censtail_cli/format.hpp"

#include <charconv>
#include <cmath>

#include "censtail_cli/dataset.hpp"

namespace censtail::cli {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "NaN";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

double parse_double(const std::string& token, const std::string& what)
{
    const std::string t = trim(token);
    double v = 0.0;
    const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size() || !std::isfinite(v))
        throw user_error("invalid number for " + what + ": '" + token + "'");
    return v;
}

long long parse_int(const std::string& token, const std::string& what)
{
    const std::string t = trim(token);
    long long v = 0;
    const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
        throw user_error("invalid integer for " + what + ": '" + token + "'");
    return v;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace censtail::cli
