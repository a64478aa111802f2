#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ilm {

// Primitive parameters of the economy. Returns are goods per unit per
// period; M is the initial nominal money stock and acts purely as a scale
// normalization.
struct ModelParams {
    double beta = 0.0;    // discount factor, in (0,1)
    double R = 0.0;       // safe-asset dividend, > 0
    double y_L = 0.0;     // low security payoff, >= 0
    double y_H = 0.0;     // high security payoff, > y_L and > R
    double lambda = 0.0;  // trading-market access probability, in [0,1]
    double theta = 0.5;   // seller bargaining weight, in (0,1)
    double mu = 0.0;      // money growth rate, >= beta - 1
    double A = 1.0;       // real-asset supply per capita, > 0
    double M = 1.0;       // initial money stock, > 0
};

// Expected-return coefficients that drive everything downstream:
//   alpha1: unconditional expected excess payoff of a securitized unit
//   alpha2: resale option value from market access
struct DerivedCoefficients {
    double alpha1 = 0.0;     // (y_L + y_H)/2 - R
    double alpha2 = 0.0;     // (lambda/2) (y_H - y_L)
    double alpha_sum = 0.0;  // alpha1 + alpha2
};

enum class CaseLabel { NoTrade, KnifeEdge, Active };

std::string to_string(CaseLabel c);

struct ValidatedParams {
    std::optional<ModelParams> params;  // set iff errors is empty
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return params.has_value(); }
};

// Checks every primitive against its admissible range and reports all
// violations, one message per field. alpha1 > 0 is legal but unusual
// (securitization pays even without resale), so it comes back as a warning.
ValidatedParams validate_params(const ModelParams& raw);

DerivedCoefficients derive_coefficients(const ModelParams& p);

// Discounted present value of the safe dividend stream: beta R / (1 - beta).
double fundamental_price(const ModelParams& p);

// Sign of alpha_sum decides whether the trading market is active. Exact zero
// is detected with an absolute tolerance (default 1e-12).
CaseLabel classify_case(const DerivedCoefficients& c, double tol = 1e-12);

}  // namespace ilm
