#pragma once

// Shared random-state helpers for the test suites. Every draw goes through
// one mt19937_64 stream with an explicit bit mapping, so failures reproduce
// across standard libraries.

#include <algorithm>
#include <cmath>
#include <random>

#include "ilm/model.hpp"
#include "ilm/steady_state.hpp"

namespace testsup {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// The worked parameter set used across the suites: an active trading market
// with a 50 percent premium over the fundamental price and mu_bar = 0.1.
inline ilm::ModelParams canonical() {
    ilm::ModelParams p;
    p.beta = 0.9;
    p.R = 1.0;
    p.y_L = 0.0;
    p.y_H = 3.0;
    p.lambda = 1.0;
    p.theta = 0.5;
    p.mu = 0.0;
    p.A = 1.0;
    p.M = 1.0;
    return p;
}

// Valid parameters with an active trading market (alpha_sum > 0) and mu
// inside the admissible policy range [beta-1, mu_bar].
inline ilm::ModelParams draw_active(std::mt19937_64& rng) {
    ilm::ModelParams p;
    p.beta = uniform(rng, 0.5, 0.98);
    p.y_L = uniform(rng, 0.0, 2.0);
    p.y_H = p.y_L + uniform(rng, 0.5, 4.0);
    p.lambda = uniform(rng, 0.05, 1.0);
    p.theta = uniform(rng, 0.1, 0.9);
    const double mix =
        0.5 * ((1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L);
    // R below both y_H and the activity bound keeps alpha_sum > 0.
    p.R = uniform(rng, 0.05, 0.95) * std::min(mix, p.y_H);
    p.A = uniform(rng, 0.2, 3.0);
    p.M = uniform(rng, 0.2, 3.0);
    const double mu_min = p.beta - 1.0;
    const double mu_bar = ilm::policy_ceiling_closed_form(p);
    p.mu = mu_min + uniform01(rng) * (mu_bar - mu_min);
    return p;
}

// Valid parameters with alpha_sum < 0, so the trading market stays shut.
inline ilm::ModelParams draw_no_trade(std::mt19937_64& rng) {
    ilm::ModelParams p;
    p.beta = uniform(rng, 0.5, 0.98);
    p.y_L = uniform(rng, 0.0, 2.0);
    p.y_H = p.y_L + uniform(rng, 0.5, 4.0);
    p.lambda = uniform(rng, 0.0, 0.9);
    p.theta = uniform(rng, 0.1, 0.9);
    const double mix =
        0.5 * ((1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L);
    // R strictly between the activity bound and y_H forces alpha_sum < 0.
    p.R = mix + uniform(rng, 0.05, 0.95) * (p.y_H - mix);
    p.A = uniform(rng, 0.2, 3.0);
    p.M = uniform(rng, 0.2, 3.0);
    p.mu = p.beta - 1.0 + uniform(rng, 0.0, 0.3);
    return p;
}

}  // namespace testsup
