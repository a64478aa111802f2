#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ilm/cli.hpp"
#include "ilm/config.hpp"
#include "ilm/model.hpp"
#include "ilm/version.hpp"

namespace {

// Flag values arrive as optionals so that only flags the user actually set
// override the config file.
struct FlagDraft {
    std::optional<double> beta, R, y_L, y_H, lambda, theta, mu, A, M;

    ilm::ParamDraft to_draft() const {
        ilm::ParamDraft d;
        d.beta = beta;
        d.R = R;
        d.y_L = y_L;
        d.y_H = y_H;
        d.lambda = lambda;
        d.theta = theta;
        d.mu = mu;
        d.A = A;
        d.M = M;
        return d;
    }
};

void add_param_flags(CLI::App* cmd, FlagDraft& f) {
    // Repeated flags take the last value, so scripts can append overrides.
    const auto last = CLI::MultiOptionPolicy::TakeLast;
    cmd->add_option("--beta", f.beta, "discount factor, in (0,1)")
        ->multi_option_policy(last);
    cmd->add_option("--R", f.R, "safe-asset dividend")
        ->multi_option_policy(last);
    cmd->add_option("--y_L", f.y_L, "low security payoff")
        ->multi_option_policy(last);
    cmd->add_option("--y_H", f.y_H, "high security payoff")
        ->multi_option_policy(last);
    cmd->add_option("--lambda", f.lambda, "market access probability")
        ->multi_option_policy(last);
    cmd->add_option("--theta", f.theta, "seller bargaining weight")
        ->multi_option_policy(last);
    cmd->add_option("--mu", f.mu, "money growth rate")
        ->multi_option_policy(last);
    cmd->add_option("--A", f.A, "asset supply per capita")
        ->multi_option_policy(last);
    cmd->add_option("--M", f.M, "initial money stock")
        ->multi_option_policy(last);
}

// Merges config file (if any) and flags into validated parameters.
// Returns false after printing diagnostics; caller exits 2.
bool resolve_params(const std::string& config_path, const FlagDraft& flags,
                    ilm::RunConfig& cfg) {
    ilm::ParamDraft draft;
    std::string path = config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("ILM_CONFIG")) path = env;
    }
    if (!path.empty()) {
        try {
            draft = ilm::parse_config_file(path);
        } catch (const ilm::ConfigError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return false;
        }
    }
    draft.overlay(flags.to_draft());

    const auto missing = draft.missing();
    if (!missing.empty()) {
        std::cerr << "error: missing parameters:";
        for (const auto& name : missing) std::cerr << " " << name;
        std::cerr << "\nerror: set them with flags or a config file"
                     " (--config or ILM_CONFIG)\n";
        return false;
    }

    const ilm::ValidatedParams checked = ilm::validate_params(draft.to_params());
    if (!checked.ok()) {
        for (const auto& e : checked.errors) std::cerr << "error: " << e << "\n";
        return false;
    }
    cfg.params = *checked.params;
    cfg.warnings = checked.warnings;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationary equilibria of a monetary securitization economy"};
    app.set_version_flag("--version",
                         std::string(ilm::kToolName) + " " + ilm::kToolVersion);
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "key = value parameter file (default: $ILM_CONFIG)");

    ilm::RunConfig cfg;
    FlagDraft flags;
    std::optional<double> z0_flag;

    auto* solve = app.add_subcommand("solve", "solve the stationary equilibrium");
    add_param_flags(solve, flags);
    solve->add_option("-o,--output", cfg.output_path, "write the CSV here");
    solve->add_flag("--csv", cfg.solve_csv, "emit the one-row CSV to stdout");

    auto* sweep = app.add_subcommand("sweep", "solve across a parameter grid");
    add_param_flags(sweep, flags);
    sweep->add_option("--var", cfg.sweep.var,
                      "swept parameter: mu lambda theta y_H y_L beta R")
        ->required();
    sweep->add_option("--from", cfg.sweep.from, "grid start")->required();
    sweep->add_option("--to", cfg.sweep.to, "grid end")->required();
    sweep->add_option("--points", cfg.sweep.points, "grid size, >= 2")
        ->required();
    sweep->add_option("-o,--output", cfg.output_path, "write the CSV here");

    auto* dynamics =
        app.add_subcommand("dynamics", "iterate the real-balance map");
    add_param_flags(dynamics, flags);
    dynamics->add_option("--z0", z0_flag,
                         "initial real balances (default: stationary point)");
    dynamics->add_option("--T", cfg.dynamics.T, "steps to iterate");
    dynamics->add_option("--escape-factor", cfg.dynamics.escape_factor,
                         "stop when |z - z*| exceeds this times max(1,|z*|)");
    dynamics->add_option("-o,--output", cfg.output_path, "write the CSV here");

    auto* simulate =
        app.add_subcommand("simulate", "Monte-Carlo cross-section of a period");
    add_param_flags(simulate, flags);
    simulate->add_option("--agents", cfg.sim.agents, "population size");
    simulate->add_option("--periods", cfg.sim.periods, "periods to sample");
    simulate->add_option("--seed", cfg.sim.seed, "RNG seed");
    simulate->add_option("--protocol", cfg.sim.protocol,
                         "price_taking or bargaining");
    simulate->add_option("-o,--output", cfg.output_path,
                         "write the per-period CSV here");

    auto* bargain = app.add_subcommand(
        "bargain", "equilibrium when resale is bargained, vs price taking");
    add_param_flags(bargain, flags);
    bargain->add_flag("--debug", cfg.debug, "dump internal coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (!resolve_params(config_path, flags, cfg)) return 2;
    cfg.dynamics.z0 = z0_flag;

    try {
        if (solve->parsed()) return ilm::cmd_solve(cfg, std::cout, std::cerr);
        if (sweep->parsed()) return ilm::cmd_sweep(cfg, std::cout, std::cerr);
        if (dynamics->parsed())
            return ilm::cmd_dynamics(cfg, std::cout, std::cerr);
        if (simulate->parsed())
            return ilm::cmd_simulate(cfg, std::cout, std::cerr);
        if (bargain->parsed()) return ilm::cmd_bargain(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
