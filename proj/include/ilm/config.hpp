#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilm/model.hpp"

namespace ilm {

// Raised by the config-file parser; message carries file and line context.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Model parameters as read from a file or flags, before completeness and
// range checks. absent fields stay unset so flag overrides compose.
struct ParamDraft {
    std::optional<double> beta, R, y_L, y_H, lambda, theta, mu, A, M;

    // Applies every field that is set in `over` on top of *this.
    void overlay(const ParamDraft& over);

    // All nine parameters are required; missing ones are reported by name.
    std::vector<std::string> missing() const;
    ModelParams to_params() const;  // pre: missing().empty()
};

// Flat `key = value` text, UTF-8, `#` starts a comment, blank lines ignored.
// Valid keys are exactly the ModelParams field names. Unknown keys and
// non-numeric values raise ConfigError with the line number.
ParamDraft parse_config_file(const std::string& path);

// Same grammar, parsing from memory (used by tests and stdin-less tools).
ParamDraft parse_config_text(const std::string& text,
                             const std::string& origin = "<config>");

struct SweepSpec {
    std::string var;  // one of: mu lambda theta y_H y_L beta R
    double from = 0.0;
    double to = 0.0;
    int points = 0;
};

struct DynamicsSpec {
    std::optional<double> z0;  // unset: start at the stationary point
    long T = 100;
    double escape_factor = 1e6;
};

struct SimSpec {
    int agents = 1000;
    long periods = 100;
    std::uint64_t seed = 1;
    std::string protocol = "price_taking";  // or "bargaining"
};

struct RunConfig {
    ModelParams params;
    std::vector<std::string> warnings;  // from validation, echoed by commands
    SweepSpec sweep;
    DynamicsSpec dynamics;
    SimSpec sim;
    std::string output_path;  // empty: write to stdout
    bool solve_csv = false;   // solve: emit the one-row CSV as well
    bool debug = false;       // bargain: dump internal coefficients
};

// Validates the sweep grid: known variable name, points >= 2, from < to.
// Returns error messages (empty when well-formed).
std::vector<std::string> check_sweep(const SweepSpec& s);

std::vector<double> sweep_grid(const SweepSpec& s);

}  // namespace ilm
