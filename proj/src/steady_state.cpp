#include "ilm/steady_state.hpp"

#include <cmath>
#include <stdexcept>

#include "ilm/investment.hpp"
#include "ilm/util.hpp"

namespace ilm {

namespace {

// Numerator and denominator of the stationary price map.
double price_formula(const ModelParams& p, double mu) {
    const double mix = (1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L;
    const double num = 0.5 * p.beta * mix - (1.0 + mu - p.beta) * p.y_L;
    const double den = 2.0 * (1.0 - p.beta) + mu;
    return num / den;
}

}  // namespace

double steady_state_asset_price(const ModelParams& p) {
    const CaseLabel label = classify_case(derive_coefficients(p));
    if (label != CaseLabel::Active) return fundamental_price(p);
    return price_formula(p, p.mu);
}

double peak_asset_price(const ModelParams& p) {
    const double mix = (1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L;
    return p.beta / (1.0 - p.beta) * 0.5 * mix;
}

double policy_ceiling_closed_form(const ModelParams& p) {
    const DerivedCoefficients c = derive_coefficients(p);
    return p.beta - 1.0 + p.beta * (1.0 - p.beta) * c.alpha_sum /
                              (p.y_L * (1.0 - p.beta) + p.beta * p.R);
}

double policy_ceiling_bisect(const ModelParams& p) {
    const DerivedCoefficients c = derive_coefficients(p);
    const double fund = fundamental_price(p);
    const double lo = p.beta - 1.0;
    if (c.alpha_sum <= 0.0) return lo;  // range degenerates to the Friedman rule
    const double hi =
        lo + 10.0 * p.beta * (1.0 - p.beta) * c.alpha_sum / (p.beta * p.R);
    auto gap = [&](double mu) { return price_formula(p, mu) - fund; };
    if (gap(lo) < 0.0 || gap(hi) > 0.0)
        throw std::domain_error(
            "policy_ceiling_bisect: range degenerate or misbracketed");
    return bisect(gap, lo, hi, 1e-12);
}

PolicyRange admissible_policy_range(const ModelParams& p) {
    return {p.beta - 1.0, policy_ceiling_closed_form(p)};
}

SolveResult solve_steady_state(const ModelParams& p) {
    const DerivedCoefficients c = derive_coefficients(p);
    const CaseLabel label = classify_case(c);
    const double fund = fundamental_price(p);

    SolveResult res;
    res.range = admissible_policy_range(p);

    if (label != CaseLabel::Active) {
        // No reallocation gains: the asset trades at its dividend value and
        // money earns its keep only under the Friedman rule. Real balances
        // are not pinned down there; they are reported as zero.
        SteadyState ss;
        ss.psi_star = fund;
        ss.p_star_real = fund + p.y_L;
        ss.case_label = label;
        res.status = SolveStatus::FundamentalOnly;
        res.state = ss;
        res.range.mu_bar = res.range.mu_min;
        res.note = "no trade; money is valued only at mu = beta - 1";
        return res;
    }

    const double mu_bar = res.range.mu_bar;
    if (p.mu > mu_bar + 1e-12 * std::max(1.0, std::abs(mu_bar))) {
        res.status = SolveStatus::Collapsed;
        res.note = "monetary equilibrium collapses: mu = " + to_shortest(p.mu) +
                   " exceeds mu_bar = " + to_shortest(mu_bar);
        return res;
    }

    SteadyState ss;
    ss.case_label = label;
    ss.psi_star = price_formula(p, p.mu);
    ss.z_star = (ss.psi_star + p.y_L) * p.A;
    ss.s_star = p.A;
    ss.p_star_real = ss.psi_star + p.y_L;
    ss.q_star = p.A;
    ss.Q_star = 0.5 * p.lambda * p.A;
    ss.liquidity_premium = ss.psi_star - fund;
    ss.welfare_trade_value = 0.5 * p.lambda * p.A * (ss.psi_star + p.y_L);
    ss.welfare_surplus = 0.5 * p.lambda * p.A * (p.y_H - p.y_L);

    // Consistency of the solution: carrying costs must be non-negative and
    // the agent must be exactly indifferent about money at (phi*, psi*).
    const double phi = ss.z_star / p.M;
    const double phi_hat = phi / (1.0 + p.mu);
    const CarryCheck chk =
        carry_costs_nonnegative(phi, ss.psi_star, phi_hat, ss.psi_star, p);
    if (!chk.asset_ok || !chk.money_ok)
        throw std::logic_error("solve_steady_state: carrying condition failed");

    const GammaCoefficients g =
        gamma_coefficients(phi, ss.psi_star, phi_hat, ss.psi_star, p);
    const double lhs = g.gamma1 + g.gamma2 * g.gamma4;
    const double rhs = g.gamma3 * g.gamma4;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    res.knife_edge_residual =
        scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
    if (res.knife_edge_residual > 1e-10)
        throw std::logic_error(
            "solve_steady_state: money-demand indifference violated");

    res.status = SolveStatus::Monetary;
    res.state = ss;
    return res;
}

WelfareReport welfare(const SteadyState& ss, const ModelParams& p) {
    WelfareReport w;
    w.trade_value = 0.5 * p.lambda * p.A * (ss.psi_star + p.y_L);
    w.surplus = 0.5 * p.lambda * p.A * (p.y_H - p.y_L);
    w.first_best = p.lambda == 1.0;
    return w;
}

double steady_state_price_slope(const ModelParams& p) {
    const double mix = (1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L;
    const double den = 2.0 * (1.0 - p.beta) + p.mu;
    return ((p.beta - 1.0) * p.y_L - 0.5 * p.beta * mix) / (den * den);
}

}  // namespace ilm
