#pragma once

#include "config.hpp"

#include <iosfwd>

namespace shockdecay::cli {

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_asymptote(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare_methods(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fit_shock(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ccw(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace shockdecay::cli
