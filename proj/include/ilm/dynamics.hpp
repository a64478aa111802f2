#pragma once

#include <optional>
#include <vector>

#include "ilm/model.hpp"

namespace ilm {

// One step of the real-balance recurrence z' = intercept + slope * z.
// slope = (2 + mu)/(2 beta) exceeds 1 for every admissible mu, so the
// stationary point is the only bounded path.
struct LinearMap {
    double intercept = 0.0;
    double slope = 0.0;
    double fixed_point() const { return intercept / (1.0 - slope); }
};

struct PathState {
    long t = 0;
    double z = 0.0;    // real balances, goods
    double psi = 0.0;  // implied asset price, z/A - y_L
};

struct PathReport {
    std::vector<PathState> states;
    double z_fixed = 0.0;
    bool stationary = false;  // z0 equals the fixed point to 1e-12 relative
    bool divergent = false;   // any other start under an expanding map
    std::optional<long> escape_t;          // first |z_t - z*| past threshold
    std::optional<long> first_negative_t;  // infeasible real balances
};

// Coefficients of the forward map for real balances (Active case).
LinearMap real_balance_map(const ModelParams& p);

// Forward asset-price map psi -> psi_hat. Throws std::domain_error when
// |1 + mu - 2 beta| < 1e-12 (the map is singular there).
double asset_price_step(double psi, const ModelParams& p);

// Iterates the map T steps from z0. The escape threshold is
// escape_factor * max(1, |z*|).
PathReport simulate_path(double z0, long T, const LinearMap& map,
                         const ModelParams& p, double escape_factor = 1e6);

}  // namespace ilm
