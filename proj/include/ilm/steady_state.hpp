#pragma once

#include <optional>
#include <string>

#include "ilm/model.hpp"

namespace ilm {

// Stationary monetary equilibrium objects, all in time-0 units.
struct SteadyState {
    double psi_star = 0.0;             // asset price, goods
    double z_star = 0.0;               // real money balances, (psi* + y_L) A
    double s_star = 0.0;               // securitized units per capita
    double p_star_real = 0.0;          // goods per security unit, psi* + y_L
    double q_star = 0.0;               // units per seller
    double Q_star = 0.0;               // units reallocated per capita
    double liquidity_premium = 0.0;    // psi* - beta R/(1-beta)
    double welfare_trade_value = 0.0;  // goods handed over per period
    double welfare_surplus = 0.0;      // payoff gain from reallocation
    CaseLabel case_label = CaseLabel::Active;
};

struct PolicyRange {
    double mu_min = 0.0;  // beta - 1, the Friedman rule
    double mu_bar = 0.0;  // largest money growth with a monetary equilibrium
};

enum class SolveStatus {
    Monetary,         // active trade, money valued, mu within range
    FundamentalOnly,  // no trade; money essential only at mu = beta - 1
    Collapsed,        // mu > mu_bar: no monetary equilibrium
};

struct SolveResult {
    SolveStatus status = SolveStatus::Collapsed;
    std::optional<SteadyState> state;
    PolicyRange range;
    double knife_edge_residual = 0.0;  // indifference check at the solution
    std::string note;
};

struct WelfareReport {
    double trade_value = 0.0;  // (lambda/2) A (psi* + y_L)
    double surplus = 0.0;      // (lambda/2) A (y_H - y_L)
    bool first_best = false;   // all mismatched holdings rebalanced
};

// Stationary asset price as a function of the money growth rate embedded in
// p. Active case only; outside it the price is the fundamental value.
double steady_state_asset_price(const ModelParams& p);

// Price at the Friedman rule mu = beta - 1, the maximum over the policy
// range: beta/(1-beta) * ((1+lambda) y_H + (1-lambda) y_L)/2.
double peak_asset_price(const ModelParams& p);

// Largest admissible money growth rate, in closed form:
// beta - 1 + beta(1-beta) alpha_sum / (y_L(1-beta) + beta R).
double policy_ceiling_closed_form(const ModelParams& p);

// Same bound found by bisecting psi(mu) - fundamental on
// [beta-1, beta-1 + 10 beta(1-beta) alpha_sum/(beta R)], to 1e-12.
// Throws std::domain_error if the bracket carries no sign change.
double policy_ceiling_bisect(const ModelParams& p);

PolicyRange admissible_policy_range(const ModelParams& p);

// Assembles the stationary equilibrium, checks the no-arbitrage carrying
// conditions and the money-demand indifference at the solution (residual
// must stay below 1e-10 relative), and reports collapse when mu > mu_bar.
SolveResult solve_steady_state(const ModelParams& p);

WelfareReport welfare(const SteadyState& ss, const ModelParams& p);

// Analytic d psi*/d mu of the stationary price map (Active case).
double steady_state_price_slope(const ModelParams& p);

}  // namespace ilm
