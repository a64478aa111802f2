#pragma once

#include "ilm/model.hpp"

namespace ilm {

// Optimal amount of the asset endowment to securitize, as a closed interval
// (the choice is indifferent along the interval's interior).
struct InvestmentChoice {
    double lower = 0.0;
    double upper = 0.0;
    double selected() const { return upper; }  // maximal-trade convention
};

// Linear coefficients of the two-asset portfolio problem between one trading
// round and the next. Prices today are (phi, psi), tomorrow (phi_hat,
// psi_hat); gamma4 and gamma5 map money balances into the securitization
// cap: min{a_hat, gamma4 m_hat + gamma5}.
struct GammaCoefficients {
    double gamma1 = 0.0;  // phi - beta phi_hat        (cost of carrying money)
    double gamma2 = 0.0;  // psi - beta (R + psi_hat)  (cost of carrying assets)
    double gamma3 = 0.0;  // beta alpha_sum            (trading-market payoff)
    double gamma4 = 0.0;  // phi_hat / (psi_hat + y_L)
    double gamma5 = 0.0;  // phi_hat mu M / (psi_hat + y_L)
};

enum class PortfolioKind { ZeroDemand, Unbounded, KnifeEdgeLocus };

// On the knife edge the agent is indifferent along the locus
// (m_hat, a_hat) = (z, gamma4 z + gamma5) for z >= z_min.
struct PortfolioChoice {
    PortfolioKind kind = PortfolioKind::ZeroDemand;
    double slope = 0.0;      // gamma4
    double intercept = 0.0;  // gamma5
    double z_min = 0.0;      // -gamma5 / gamma4
    double a_at(double z) const { return slope * z + intercept; }
};

struct CarryCheck {
    bool asset_ok = false;  // psi >= beta (R + psi_hat), slack tol 1e-12
    bool money_ok = false;  // phi >= beta phi_hat
};

// How much of the endowment a to turn into securities, given market access
// worth alpha2 per unit and budget cap alpha3 = phi m / (psi + y_L).
// The sign pair (alpha_sum, alpha1) picks the branch; equalities are
// detected with absolute tolerance 1e-12.
InvestmentChoice optimal_s(double a, double m, double psi, double phi,
                           const DerivedCoefficients& c, double y_L);

// Throws std::domain_error if psi_hat + y_L <= 0 or phi_hat <= 0.
GammaCoefficients gamma_coefficients(double phi, double psi, double phi_hat,
                                     double psi_hat, const ModelParams& p);

// Money demand is zero, unbounded, or pinned to the knife-edge locus
// according to the sign of gamma1 + gamma2 gamma4 - gamma3 gamma4
// (relative tolerance 1e-12).
PortfolioChoice portfolio_choice(const GammaCoefficients& g);

// No-arbitrage carrying conditions between two periods.
CarryCheck carry_costs_nonnegative(double phi, double psi, double phi_hat,
                                   double psi_hat, const ModelParams& p);

}  // namespace ilm
