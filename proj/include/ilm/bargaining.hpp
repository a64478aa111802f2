#pragma once

#include <string>

#include "ilm/investment.hpp"
#include "ilm/model.hpp"

namespace ilm {

// Money levels at which the two trade constraints switch, for a seller with
// s units at prices (psi, phi):
//   below m_l the buyer's money binds alone;
//   between m_l and m_h both transfers are at their caps;
//   above m_h only the securities cap binds.
struct BargainingThresholds {
    double m_l = 0.0;
    double m_h = 0.0;
};

struct BindingSet {
    bool money = false;
    bool securities = false;
};

struct BargainingOutcome {
    double d_m = 0.0;  // dollars handed to the seller
    double d_s = 0.0;  // units handed to the buyer
    BindingSet binding;
};

enum class ReturnsRegime { Good, Bad };

std::string to_string(ReturnsRegime r);

// Internal coefficients of the portfolio problem under bargaining; exposed
// for debugging output only.
struct BargainingDebug {
    double c1_a = 0.0, c2_a = 0.0, c3_a = 0.0;
    double c1_m = 0.0, c2_m = 0.0, c3_m = 0.0, c4_m = 0.0, c5_m = 0.0;
};

struct BargainingEquilibrium {
    double psi_star = 0.0;    // always the fundamental value
    ReturnsRegime regime = ReturnsRegime::Bad;
    double z_star = 0.0;      // real balances from market clearing (good regime)
    double s_star = 0.0;      // securitized units per capita
    double d_s = 0.0;         // units exchanged per meeting
    double d_m_real = 0.0;    // goods value of the money exchanged
    double mu_min = 0.0;
    double mu_bar = 0.0;      // ceiling under bargaining
    bool incompatibility_strict = false;
    BargainingDebug debug;
    std::string note;
};

BargainingThresholds bargaining_thresholds(double s, double psi, double phi,
                                           const ModelParams& p);

// Nash split of the match surplus between a buyer with m_bar dollars and a
// seller with s units. Closed form:
//   d_m = min{m_bar, s (psi + theta y_H + (1-theta) y_L) / phi}
//   d_s = min{s, phi m_bar (psi + (1-theta) y_H + theta y_L)
//                  / ((psi + y_H)(psi + y_L))}
// Throws std::domain_error when psi + y_L <= 0 or y_H == y_L.
BargainingOutcome nash_bargain(double m_bar, double s, double psi, double phi,
                               const ModelParams& p);

// Securitization choice when resale happens through bargaining. The branch
// is decided by (y_H + y_L)/2 against R - lambda theta (y_H - y_L)/4; the
// cap is phi m_bar / (psi + theta y_H + (1-theta) y_L).
InvestmentChoice optimal_securitization_bargaining(double a, double m_bar,
                                                   double psi, double phi,
                                                   const ModelParams& p);

// Money growth ceiling when traders bargain:
// beta - 1 + (lambda/4)(1-theta)(y_H - y_L) / (beta R/(1-beta) + y_L).
double policy_ceiling_bargaining(const ModelParams& p);

// Stationary equilibrium under bargaining. The asset always trades at the
// fundamental price; in the good-returns regime the whole endowment is
// securitized and real balances are just enough to buy it in one meeting.
BargainingEquilibrium solve_bargaining_equilibrium(const ModelParams& p);

}  // namespace ilm
