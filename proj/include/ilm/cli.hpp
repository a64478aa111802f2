#pragma once

#include <iosfwd>

#include "ilm/config.hpp"

namespace ilm {

// Subcommand bodies. Each writes its report to `out` (or cfg.output_path
// when set), diagnostics to `err`, and returns the process exit code:
//   0 success, 2 validation error, 3 no equilibrium, 4 I/O failure.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dynamics(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bargain(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ilm
