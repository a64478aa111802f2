#include "ilm/dfm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ilm {

namespace {

void require_positive_phi(double phi) {
    if (!(phi > 0.0))
        throw std::domain_error(
            "phi = " + std::to_string(phi) +
            ": money has no value; trade correspondence undefined");
}

}  // namespace

std::string to_string(DfmRegime r) {
    switch (r) {
        case DfmRegime::MoneyConstrained: return "MoneyConstrained";
        case DfmRegime::Interior: return "Interior";
        case DfmRegime::AssetConstrained: return "AssetConstrained";
    }
    return "?";
}

TradeCorrespondence individual_supply(double p, double s, double psi,
                                      double phi, double y_L) {
    require_positive_phi(phi);
    if (s < 0.0) throw std::domain_error("individual_supply: s < 0");
    const double reservation = (psi + y_L) / phi;
    const double tol = 1e-12 * std::max(1.0, std::abs(p));
    if (p < reservation - tol) return {0.0, 0.0};
    if (p <= reservation + tol) return {0.0, s};
    return {s, s};
}

TradeCorrespondence individual_demand(double p, double m, double psi,
                                      double phi, double y_H) {
    require_positive_phi(phi);
    if (m < 0.0) throw std::domain_error("individual_demand: m < 0");
    if (!(p > 0.0))
        throw std::domain_error("individual_demand: unbounded demand at p <= 0");
    const double reservation = (psi + y_H) / phi;
    const double tol = 1e-12 * std::max(1.0, std::abs(p));
    if (p > reservation + tol) return {0.0, 0.0};
    if (p >= reservation - tol) return {0.0, m / p};
    return {m / p, m / p};
}

DfmOutcome clear_market(double s, double m, double psi, double phi,
                        const ModelParams& p) {
    require_positive_phi(phi);
    if (s < 0.0 || m < 0.0)
        throw std::domain_error("clear_market: negative holdings");

    const double v_L = psi + p.y_L;  // seller valuation, goods per unit
    const double v_H = psi + p.y_H;  // buyer valuation
    const double money_goods = phi * m;

    DfmOutcome out;

    // Quantity: sellers part with everything unless buyer money runs out
    // first at the seller reservation price.
    double money_cap;
    if (m == 0.0)
        money_cap = 0.0;
    else if (v_L <= 0.0)
        money_cap = std::numeric_limits<double>::infinity();
    else
        money_cap = money_goods / v_L;
    out.q_star = std::min(s, money_cap);
    out.Q_star = 0.5 * p.lambda * out.q_star;

    // Price branch, with a relative tolerance band at each boundary.
    const double lo = v_L * s;
    const double hi = v_H * s;
    const double tol_lo = 1e-12 * std::max(std::abs(money_goods), std::abs(lo));
    const double tol_hi = 1e-12 * std::max(std::abs(money_goods), std::abs(hi));

    if (money_goods < lo - tol_lo) {
        out.regime = DfmRegime::MoneyConstrained;
        out.p_star = v_L / phi;
    } else if (money_goods <= hi + tol_hi) {
        out.regime = DfmRegime::Interior;
        if (s > 0.0) {
            out.p_star = m / s;
        } else {
            // s = 0 and m = 0: every price between the two reservations
            // clears zero trade; report the midpoint of that interval.
            out.p_star = 0.5 * (v_L + v_H) / phi;
        }
    } else {
        out.regime = DfmRegime::AssetConstrained;
        out.p_star = v_H / phi;
    }
    return out;
}

}  // namespace ilm
