#pragma once

#include <string>

namespace censtail::cli {

// Shortest decimal text that round-trips; NaN prints as "NaN".
std::string format_double(double v);

// Strict parse of a full token; throws user_error naming `what`.
double parse_double(const std::string& token, const std::string& what);
long long parse_int(const std::string& token, const std::string& what);

std::string trim(const std::string& s);

}  // namespace censtail::cli
