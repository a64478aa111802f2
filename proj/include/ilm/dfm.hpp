#pragma once

#include <string>

#include "ilm/model.hpp"

namespace ilm {

// Closed interval of optimal trade sizes. lower == upper except at the
// indifference price, where any point of the interval is a best response.
struct TradeCorrespondence {
    double lower = 0.0;
    double upper = 0.0;
    // The market convention everywhere in this project: at indifference,
    // take the largest trade.
    double selected() const { return upper; }
};

enum class DfmRegime { MoneyConstrained, Interior, AssetConstrained };

std::string to_string(DfmRegime r);

struct DfmOutcome {
    double p_star = 0.0;  // dollars per security unit
    double q_star = 0.0;  // units traded per seller
    double Q_star = 0.0;  // aggregate units reallocated per capita
    DfmRegime regime = DfmRegime::Interior;
};

// Seller best response at dollar price p, holding s units, when the security
// is worth psi + y_L goods to the seller and a dollar is worth phi goods.
// Flat at 0 below (psi + y_L)/phi, indifferent at it, sells everything above.
TradeCorrespondence individual_supply(double p, double s, double psi,
                                      double phi, double y_L);

// Buyer best response with m dollars: spends everything while p is below the
// reservation price (psi + y_H)/phi, is indifferent at it, exits above.
// Throws std::domain_error at p <= 0 (demand would be unbounded).
TradeCorrespondence individual_demand(double p, double m, double psi,
                                      double phi, double y_H);

// Walrasian price and quantity for per-capita seller holdings s and buyer
// money m. q* = min{s, phi m / (psi + y_L)}; the price sits at the seller
// reservation when money is short, at m/s in between, and at the buyer
// reservation when money is plentiful. Boundary placement uses a relative
// tolerance of 1e-12.
DfmOutcome clear_market(double s, double m, double psi, double phi,
                        const ModelParams& p);

}  // namespace ilm
