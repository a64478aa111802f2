#include "ilm/model.hpp"

#include <cmath>

#include "ilm/util.hpp"

namespace ilm {

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::NoTrade: return "NoTradeCase";
        case CaseLabel::KnifeEdge: return "KnifeEdgeCase";
        case CaseLabel::Active: return "ActiveCase";
    }
    return "?";
}

ValidatedParams validate_params(const ModelParams& raw) {
    ValidatedParams v;
    auto fail = [&](std::string msg) { v.errors.push_back(std::move(msg)); };

    // Positive-form checks so NaN inputs land in the error list too.
    if (!(raw.beta > 0.0 && raw.beta < 1.0))
        fail("beta = " + to_shortest(raw.beta) + ": out of (0,1)");
    if (!(raw.R > 0.0))
        fail("R = " + to_shortest(raw.R) + ": must be > 0");
    if (!(raw.y_L >= 0.0))
        fail("y_L = " + to_shortest(raw.y_L) + ": must be >= 0");
    if (!(raw.y_L < raw.y_H))
        fail("y_L = " + to_shortest(raw.y_L) + ", y_H = " + to_shortest(raw.y_H) +
             ": y_L < y_H violated");
    if (!(raw.y_H > raw.R))
        fail("y_H = " + to_shortest(raw.y_H) + ", R = " + to_shortest(raw.R) +
             ": y_H > R violated");
    if (!(raw.lambda >= 0.0 && raw.lambda <= 1.0))
        fail("lambda = " + to_shortest(raw.lambda) + ": out of [0,1]");
    if (!(raw.theta > 0.0 && raw.theta < 1.0))
        fail("theta = " + to_shortest(raw.theta) + ": out of (0,1)");
    if (raw.beta > 0.0 && raw.beta < 1.0 && !(raw.mu >= raw.beta - 1.0))
        fail("mu = " + to_shortest(raw.mu) + ": below beta - 1 = " +
             to_shortest(raw.beta - 1.0) + " (money would dominate all assets)");
    if (!(raw.A > 0.0))
        fail("A = " + to_shortest(raw.A) + ": must be > 0");
    if (!(raw.M > 0.0))
        fail("M = " + to_shortest(raw.M) + ": must be > 0");

    if (v.errors.empty()) {
        const DerivedCoefficients c = derive_coefficients(raw);
        if (c.alpha1 > 0.0)
            v.warnings.push_back("alpha1 = " + to_shortest(c.alpha1) + " > 0");
        v.params = raw;
    }
    return v;
}

DerivedCoefficients derive_coefficients(const ModelParams& p) {
    DerivedCoefficients c;
    c.alpha1 = 0.5 * (p.y_L + p.y_H) - p.R;
    c.alpha2 = 0.5 * p.lambda * (p.y_H - p.y_L);
    c.alpha_sum = c.alpha1 + c.alpha2;
    return c;
}

double fundamental_price(const ModelParams& p) {
    return p.beta * p.R / (1.0 - p.beta);
}

CaseLabel classify_case(const DerivedCoefficients& c, double tol) {
    if (std::abs(c.alpha_sum) <= tol) return CaseLabel::KnifeEdge;
    return c.alpha_sum < 0.0 ? CaseLabel::NoTrade : CaseLabel::Active;
}

}  // namespace ilm
