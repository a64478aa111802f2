#include "ilm/investment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilm {

InvestmentChoice optimal_s(double a, double m, double psi, double phi,
                           const DerivedCoefficients& c, double y_L) {
    if (!(a >= 0.0) || !(m >= 0.0))
        throw std::domain_error("optimal_s: negative holdings");
    if (!(psi + y_L > 0.0))
        throw std::domain_error("optimal_s: psi + y_L must be > 0");
    if (!(phi > 0.0)) throw std::domain_error("optimal_s: phi must be > 0");

    const double alpha3 = phi * m / (psi + y_L);
    const double cap = std::min(alpha3, a);
    const double tol = 1e-12;

    // Objective in s: alpha1 s + alpha2 min{s, alpha3} on [0, a].
    if (c.alpha_sum < -tol) return {0.0, 0.0};
    if (std::abs(c.alpha_sum) <= tol) return {0.0, cap};
    if (c.alpha1 < -tol) return {cap, cap};
    if (std::abs(c.alpha1) <= tol) return {cap, a};
    return {a, a};  // alpha1 > 0: securitizing pays even past the trade cap
}

GammaCoefficients gamma_coefficients(double phi, double psi, double phi_hat,
                                     double psi_hat, const ModelParams& p) {
    if (!(psi_hat + p.y_L > 0.0))
        throw std::domain_error("gamma_coefficients: psi_hat + y_L must be > 0");
    if (!(phi_hat > 0.0))
        throw std::domain_error("gamma_coefficients: phi_hat must be > 0");

    const DerivedCoefficients c = derive_coefficients(p);
    GammaCoefficients g;
    g.gamma1 = phi - p.beta * phi_hat;
    g.gamma2 = psi - p.beta * (p.R + psi_hat);
    g.gamma3 = p.beta * c.alpha_sum;
    g.gamma4 = phi_hat / (psi_hat + p.y_L);
    g.gamma5 = phi_hat * p.mu * p.M / (psi_hat + p.y_L);
    return g;
}

PortfolioChoice portfolio_choice(const GammaCoefficients& g) {
    if (!(g.gamma4 > 0.0))
        throw std::domain_error("portfolio_choice: gamma4 must be > 0");

    const double lhs = g.gamma1 + g.gamma2 * g.gamma4;
    const double rhs = g.gamma3 * g.gamma4;
    const double tol = 1e-12 * std::max(std::abs(rhs), std::abs(lhs));

    PortfolioChoice choice;
    choice.slope = g.gamma4;
    choice.intercept = g.gamma5;
    choice.z_min = -g.gamma5 / g.gamma4;
    if (std::abs(lhs - rhs) <= tol)
        choice.kind = PortfolioKind::KnifeEdgeLocus;
    else
        choice.kind = lhs > rhs ? PortfolioKind::ZeroDemand
                                : PortfolioKind::Unbounded;
    return choice;
}

CarryCheck carry_costs_nonnegative(double phi, double psi, double phi_hat,
                                   double psi_hat, const ModelParams& p) {
    const double slack = 1e-12;
    CarryCheck chk;
    chk.asset_ok = psi >= p.beta * (p.R + psi_hat) - slack;
    chk.money_ok = phi >= p.beta * phi_hat - slack;
    return chk;
}

}  // namespace ilm
