#include "ilm/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ilm/bargaining.hpp"
#include "ilm/dynamics.hpp"
#include "ilm/simulation.hpp"
#include "ilm/steady_state.hpp"
#include "ilm/util.hpp"
#include "ilm/version.hpp"

namespace ilm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoEquilibrium = 3;
constexpr int kExitIo = 4;

std::string param_echo(const ModelParams& p) {
    return "beta=" + to_shortest(p.beta) + " R=" + to_shortest(p.R) +
           " y_L=" + to_shortest(p.y_L) + " y_H=" + to_shortest(p.y_H) +
           " lambda=" + to_shortest(p.lambda) + " theta=" + to_shortest(p.theta) +
           " mu=" + to_shortest(p.mu) + " A=" + to_shortest(p.A) +
           " M=" + to_shortest(p.M);
}

void provenance(std::ostream& os, const char* cmd, const ModelParams& p) {
    os << "# " << kToolName << " " << cmd << " " << kToolVersion << "\n";
    os << "# " << param_echo(p) << "\n";
}

void echo_warnings(const RunConfig& cfg, std::ostream& err) {
    for (const auto& w : cfg.warnings) err << "warning: " << w << "\n";
}

// Routes the payload to cfg.output_path when set, else to `out`.
int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& payload) {
    if (cfg.output_path.empty()) {
        payload(out);
        return kExitOk;
    }
    std::ofstream f(cfg.output_path);
    if (!f) {
        err << "error: cannot open output file `" << cfg.output_path << "`\n";
        return kExitIo;
    }
    payload(f);
    f.flush();
    if (!f) {
        err << "error: write to `" << cfg.output_path << "` failed\n";
        return kExitIo;
    }
    return kExitOk;
}

void kv(std::ostream& os, const char* key, const std::string& val) {
    os << std::left << std::setw(20) << key << " = " << val << "\n";
}

void kv(std::ostream& os, const char* key, double val) {
    kv(os, key, to_shortest(val));
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

// Sweep-row fields for one parameter point. Out-of-range points still carry
// the price map's value so the whole policy curve can be plotted.
struct SweepRow {
    double psi = 0.0;
    double premium = 0.0;
    double z = 0.0;
    double surplus = 0.0;
    bool in_range = false;
};

SweepRow sweep_row(const ModelParams& p) {
    SweepRow row;
    const double fund = fundamental_price(p);
    const CaseLabel label = classify_case(derive_coefficients(p));
    row.psi = steady_state_asset_price(p);
    row.premium = row.psi - fund;
    if (label == CaseLabel::Active) {
        const double mu_bar = policy_ceiling_closed_form(p);
        row.in_range = p.mu <= mu_bar + 1e-12 * std::max(1.0, std::abs(mu_bar));
        row.z = (row.psi + p.y_L) * p.A;
        row.surplus = 0.5 * p.lambda * p.A * (p.y_H - p.y_L);
    } else {
        row.in_range = std::abs(p.mu - (p.beta - 1.0)) <= 1e-12;
        row.z = 0.0;
        row.surplus = 0.0;
    }
    return row;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    echo_warnings(cfg, err);
    const ModelParams& p = cfg.params;
    const SolveResult sol = solve_steady_state(p);
    if (sol.status == SolveStatus::Collapsed) {
        err << "error: " << sol.note << "\n";
        return kExitNoEquilibrium;
    }

    const SteadyState& ss = *sol.state;
    const WelfareReport w = welfare(ss, p);
    kv(out, "case", to_string(ss.case_label));
    kv(out, "psi_star", ss.psi_star);
    kv(out, "fundamental", fundamental_price(p));
    kv(out, "liquidity_premium", ss.liquidity_premium);
    kv(out, "z_star", ss.z_star);
    kv(out, "s_star", ss.s_star);
    kv(out, "q_star", ss.q_star);
    kv(out, "Q_star", ss.Q_star);
    kv(out, "p_star_real", ss.p_star_real);
    kv(out, "welfare_trade_value", ss.welfare_trade_value);
    kv(out, "welfare_surplus", ss.welfare_surplus);
    kv(out, "first_best", bool_text(w.first_best));
    kv(out, "mu_min", sol.range.mu_min);
    kv(out, "mu_bar", sol.range.mu_bar);
    if (!sol.note.empty()) kv(out, "note", sol.note);

    if (!cfg.solve_csv && cfg.output_path.empty()) return kExitOk;
    return emit(cfg, out, err, [&](std::ostream& os) {
        provenance(os, "solve", p);
        os << "case,psi_star,liquidity_premium,z_star,s_star,q_star,Q_star,"
              "p_star_real,welfare_trade_value,welfare_surplus,mu_min,mu_bar\n";
        os << to_string(ss.case_label) << "," << to_shortest(ss.psi_star) << ","
           << to_shortest(ss.liquidity_premium) << "," << to_shortest(ss.z_star)
           << "," << to_shortest(ss.s_star) << "," << to_shortest(ss.q_star)
           << "," << to_shortest(ss.Q_star) << "," << to_shortest(ss.p_star_real)
           << "," << to_shortest(ss.welfare_trade_value) << ","
           << to_shortest(ss.welfare_surplus) << ","
           << to_shortest(sol.range.mu_min) << ","
           << to_shortest(sol.range.mu_bar) << "\n";
    });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    echo_warnings(cfg, err);
    const auto sweep_errors = check_sweep(cfg.sweep);
    if (!sweep_errors.empty()) {
        for (const auto& e : sweep_errors) err << "error: " << e << "\n";
        return kExitValidation;
    }

    const std::vector<double> grid = sweep_grid(cfg.sweep);

    // Every grid point must be a valid parameter set before any row is
    // written, so a sweep never emits a half-finished file.
    std::vector<ModelParams> points;
    points.reserve(grid.size());
    for (double v : grid) {
        ModelParams p = cfg.params;
        if (cfg.sweep.var == "mu") p.mu = v;
        else if (cfg.sweep.var == "lambda") p.lambda = v;
        else if (cfg.sweep.var == "theta") p.theta = v;
        else if (cfg.sweep.var == "y_H") p.y_H = v;
        else if (cfg.sweep.var == "y_L") p.y_L = v;
        else if (cfg.sweep.var == "beta") p.beta = v;
        else p.R = v;
        const ValidatedParams chk = validate_params(p);
        if (!chk.ok()) {
            err << "error: sweep point " << cfg.sweep.var << " = "
                << to_shortest(v) << " invalid:\n";
            for (const auto& e : chk.errors) err << "error:   " << e << "\n";
            return kExitValidation;
        }
        points.push_back(p);
    }

    return emit(cfg, out, err, [&](std::ostream& os) {
        provenance(os, "sweep", cfg.params);
        os << "# var=" << cfg.sweep.var << " from=" << to_shortest(cfg.sweep.from)
           << " to=" << to_shortest(cfg.sweep.to)
           << " points=" << cfg.sweep.points << "\n";
        os << "var,psi_star,premium,z_star,welfare_surplus,in_range\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const SweepRow row = sweep_row(points[i]);
            os << to_shortest(grid[i]) << "," << to_shortest(row.psi) << ","
               << to_shortest(row.premium) << "," << to_shortest(row.z) << ","
               << to_shortest(row.surplus) << "," << bool_text(row.in_range)
               << "\n";
        }
    });
}

int cmd_dynamics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    echo_warnings(cfg, err);
    const ModelParams& p = cfg.params;
    if (classify_case(derive_coefficients(p)) != CaseLabel::Active) {
        err << "error: no monetary dynamics outside the active-trade case\n";
        return kExitNoEquilibrium;
    }
    if (cfg.dynamics.T < 0) {
        err << "error: dynamics horizon T must be >= 0\n";
        return kExitValidation;
    }

    const LinearMap map = real_balance_map(p);
    const double z0 = cfg.dynamics.z0.value_or(map.fixed_point());
    const PathReport rep =
        simulate_path(z0, cfg.dynamics.T, map, p, cfg.dynamics.escape_factor);

    return emit(cfg, out, err, [&](std::ostream& os) {
        provenance(os, "dynamics", p);
        os << "# z0=" << to_shortest(z0)
           << " intercept=" << to_shortest(map.intercept)
           << " slope=" << to_shortest(map.slope)
           << " z_fixed=" << to_shortest(rep.z_fixed) << "\n";
        os << "t,z,psi\n";
        for (const PathState& st : rep.states)
            os << st.t << "," << to_shortest(st.z) << "," << to_shortest(st.psi)
               << "\n";
        os << "# stationary=" << bool_text(rep.stationary)
           << " divergent=" << bool_text(rep.divergent) << "\n";
        if (rep.escape_t)
            os << "# escape_t=" << *rep.escape_t << " (threshold "
               << to_shortest(cfg.dynamics.escape_factor) << "*max(1,|z*|))\n";
        if (rep.first_negative_t)
            os << "# first_negative_t=" << *rep.first_negative_t
               << " (real balances infeasible)\n";
    });
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    echo_warnings(cfg, err);
    Protocol proto;
    if (cfg.sim.protocol == "price_taking") {
        proto = Protocol::PriceTaking;
    } else if (cfg.sim.protocol == "bargaining") {
        proto = Protocol::Bargaining;
    } else {
        err << "error: protocol `" << cfg.sim.protocol
            << "` not one of: price_taking, bargaining\n";
        return kExitValidation;
    }

    SimResult res;
    try {
        res = run_simulation(cfg.params, cfg.sim.agents, cfg.sim.periods,
                             cfg.sim.seed, proto);
    } catch (const NoEquilibriumError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoEquilibrium;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    kv(out, "protocol", cfg.sim.protocol);
    kv(out, "agents", std::to_string(res.stats.agents));
    kv(out, "periods", std::to_string(res.stats.periods));
    kv(out, "seed", std::to_string(res.stats.seed));
    kv(out, "mean_Q", res.stats.mean_Q);
    kv(out, "se_Q", res.stats.se_Q);
    kv(out, "mean_price", res.stats.mean_price);
    kv(out, "surplus", res.stats.surplus);
    kv(out, "se_surplus", res.stats.se_surplus);

    if (cfg.output_path.empty()) return kExitOk;
    return emit(cfg, out, err, [&](std::ostream& os) {
        provenance(os, "simulate", cfg.params);
        os << "# protocol=" << cfg.sim.protocol << " agents=" << cfg.sim.agents
           << " periods=" << cfg.sim.periods << " seed=" << cfg.sim.seed
           << "\n";
        os << "period,Q,price,surplus\n";
        for (const PeriodRecord& r : res.periods)
            os << r.period << "," << to_shortest(r.Q) << ","
               << to_shortest(r.price) << "," << to_shortest(r.surplus) << "\n";
    });
}

int cmd_bargain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    echo_warnings(cfg, err);
    const ModelParams& p = cfg.params;
    const BargainingEquilibrium eq = solve_bargaining_equilibrium(p);
    const SolveResult pt = solve_steady_state(p);

    out << "bargaining protocol\n";
    kv(out, "  psi_star", eq.psi_star);
    kv(out, "  regime", to_string(eq.regime));
    kv(out, "  s_star", eq.s_star);
    kv(out, "  z_star", eq.z_star);
    kv(out, "  d_s", eq.d_s);
    kv(out, "  d_m_real", eq.d_m_real);
    kv(out, "  mu_min", eq.mu_min);
    kv(out, "  mu_bar", eq.mu_bar);
    kv(out, "  thresholds_strict", bool_text(eq.incompatibility_strict));
    kv(out, "  note", eq.note);

    out << "price-taking protocol\n";
    if (pt.status == SolveStatus::Collapsed) {
        kv(out, "  note", pt.note);
    } else {
        kv(out, "  psi_star", pt.state->psi_star);
        kv(out, "  liquidity_premium", pt.state->liquidity_premium);
        kv(out, "  mu_min", pt.range.mu_min);
        kv(out, "  mu_bar", pt.range.mu_bar);
        if (!pt.note.empty()) kv(out, "  note", pt.note);
    }

    out << "contrast\n";
    kv(out, "  premium_bargaining", 0.0);
    if (pt.status != SolveStatus::Collapsed)
        kv(out, "  premium_price_taking", pt.state->liquidity_premium);
    kv(out, "  mu_bar_gap",
       (pt.status != SolveStatus::Collapsed ? pt.range.mu_bar : 0.0) -
           eq.mu_bar);

    if (cfg.debug) {
        out << "internal coefficients\n";
        kv(out, "  c1_a", eq.debug.c1_a);
        kv(out, "  c2_a", eq.debug.c2_a);
        kv(out, "  c3_a", eq.debug.c3_a);
        kv(out, "  c1_m", eq.debug.c1_m);
        kv(out, "  c2_m", eq.debug.c2_m);
        kv(out, "  c3_m", eq.debug.c3_m);
        kv(out, "  c4_m", eq.debug.c4_m);
        kv(out, "  c5_m", eq.debug.c5_m);
    }
    return kExitOk;
}

}  // namespace ilm
