#pragma once

#include <iosfwd>
#include <string>

#include "censtail/simulation.hpp"

namespace censtail::cli {

// Plain "key = value" lines; '#' starts a comment. Recognised keys:
//   n, replicates, gamma1, gamma2 | p, eta, tau1, epsilon, theta1,
//   alphas (comma list), k (comma list or lo:hi:step), seed, threads
// Unknown keys are rejected by name.
SweepSpec parse_sweep_config(std::istream& in);
SweepSpec read_sweep_config_file(const std::string& path);

std::string write_sweep_config(const SweepSpec& spec);

}  // namespace censtail::cli
