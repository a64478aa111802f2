#include "ilm/bargaining.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ilm/util.hpp"

namespace ilm {

namespace {

void check_bargain_domain(double psi, double phi, const ModelParams& p) {
    if (!(phi > 0.0)) throw std::domain_error("bargaining: phi must be > 0");
    if (!(psi + p.y_L > 0.0))
        throw std::domain_error("bargaining: psi + y_L must be > 0");
    if (p.y_H == p.y_L)
        throw std::domain_error("bargaining: degenerate surplus (y_H = y_L)");
}

// Buyer-side and seller-side weighted valuations.
double seller_extraction(double psi, const ModelParams& p) {
    return psi + p.theta * p.y_H + (1.0 - p.theta) * p.y_L;
}

double buyer_concession(double psi, const ModelParams& p) {
    return psi + (1.0 - p.theta) * p.y_H + p.theta * p.y_L;
}

}  // namespace

std::string to_string(ReturnsRegime r) {
    return r == ReturnsRegime::Good ? "GoodReturns" : "BadReturns";
}

BargainingThresholds bargaining_thresholds(double s, double psi, double phi,
                                           const ModelParams& p) {
    check_bargain_domain(psi, phi, p);
    if (s < 0.0) throw std::domain_error("bargaining_thresholds: s < 0");
    BargainingThresholds th;
    th.m_h = s / phi * seller_extraction(psi, p);
    th.m_l = s / phi * (psi + p.y_L) * (psi + p.y_H) / buyer_concession(psi, p);
    return th;
}

BargainingOutcome nash_bargain(double m_bar, double s, double psi, double phi,
                               const ModelParams& p) {
    check_bargain_domain(psi, phi, p);
    if (m_bar < 0.0 || s < 0.0)
        throw std::domain_error("nash_bargain: negative holdings");

    BargainingOutcome out;
    out.d_m = std::min(m_bar, s * seller_extraction(psi, p) / phi);
    out.d_s = std::min(s, phi * m_bar * buyer_concession(psi, p) /
                              ((psi + p.y_H) * (psi + p.y_L)));

    const BargainingThresholds th = bargaining_thresholds(s, psi, phi, p);
    const double tol = 1e-12 * std::max({1.0, m_bar, th.m_h});
    out.binding.money = m_bar <= th.m_h + tol;
    out.binding.securities = m_bar >= th.m_l - tol;
    return out;
}

InvestmentChoice optimal_securitization_bargaining(double a, double m_bar,
                                                   double psi, double phi,
                                                   const ModelParams& p) {
    check_bargain_domain(psi, phi, p);
    if (a < 0.0 || m_bar < 0.0)
        throw std::domain_error(
            "optimal_securitization_bargaining: negative holdings");

    const double mean_y = 0.5 * (p.y_H + p.y_L);
    const double hurdle =
        p.R - 0.25 * p.lambda * p.theta * (p.y_H - p.y_L);
    const double cap =
        std::min(a, phi * m_bar / seller_extraction(psi, p));
    const double tol =
        1e-12 * std::max({1.0, std::abs(mean_y), std::abs(hurdle)});

    if (mean_y < hurdle - tol) return {0.0, 0.0};
    if (mean_y <= hurdle + tol) return {0.0, cap};
    return {cap, cap};
}

double policy_ceiling_bargaining(const ModelParams& p) {
    return p.beta - 1.0 +
           0.25 * p.lambda * (1.0 - p.theta) * (p.y_H - p.y_L) /
               (fundamental_price(p) + p.y_L);
}

BargainingEquilibrium solve_bargaining_equilibrium(const ModelParams& p) {
    BargainingEquilibrium eq;
    eq.psi_star = fundamental_price(p);
    eq.mu_min = p.beta - 1.0;

    const double psi = eq.psi_star;
    const double mean_y = 0.5 * (p.y_H + p.y_L);
    const double hurdle =
        p.R - 0.25 * p.lambda * p.theta * (p.y_H - p.y_L);
    eq.regime = mean_y >= hurdle ? ReturnsRegime::Good : ReturnsRegime::Bad;

    const double k_h = seller_extraction(psi, p);
    const double k_l = buyer_concession(psi, p);
    const double pair_value = (psi + p.y_H) * (psi + p.y_L);
    eq.incompatibility_strict = k_h * k_l > pair_value;
    if (!eq.incompatibility_strict)
        throw std::logic_error(
            "solve_bargaining_equilibrium: threshold ordering violated");

    if (eq.regime == ReturnsRegime::Bad) {
        eq.mu_bar = eq.mu_min;
        eq.note =
            "securitization unprofitable; money is valued only at "
            "mu = beta - 1";
        eq.debug.c1_a = psi - p.beta * (psi + p.R);
        eq.debug.c2_a = 0.5 * (p.y_L + p.y_H) - p.R +
                        0.25 * p.lambda * p.theta * (p.y_H - p.y_L);
        return eq;
    }

    // Good returns: everything is securitized; a meeting moves the whole
    // stock against the buyer's whole money balance, so real balances come
    // from the securities-side clearing condition.
    eq.mu_bar = policy_ceiling_bargaining(p);
    eq.s_star = p.A;
    eq.z_star = p.A * pair_value / k_l;
    eq.d_s = p.A;
    eq.d_m_real = eq.z_star;
    eq.note = "asset priced at fundamental value; no liquidity premium";

    // Portfolio-problem coefficients at the stationary solution, time-0
    // prices: phi M = z*, tomorrow's phi scaled by 1/(1+mu).
    const double phi = eq.z_star / p.M;
    const double phi_hat = phi / (1.0 + p.mu);
    eq.debug.c1_a = psi - p.beta * (psi + p.R);
    eq.debug.c2_a = 0.5 * (p.y_L + p.y_H) - p.R +
                    0.25 * p.lambda * p.theta * (p.y_H - p.y_L);
    eq.debug.c3_a = phi_hat * (1.0 + p.mu) * p.M / k_h;
    eq.debug.c1_m = phi - p.beta * phi_hat;
    eq.debug.c2_m = 0.25 * p.lambda * phi_hat * k_l / (psi + p.y_L);
    eq.debug.c3_m = pair_value * eq.s_star / (k_l * phi_hat) - p.mu * p.M;
    eq.debug.c4_m = 0.25 * p.lambda * phi_hat;
    eq.debug.c5_m = k_h * eq.s_star / phi_hat - p.mu * p.M;
    return eq;
}

}  // namespace ilm
