#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ilm/model.hpp"

namespace ilm {

enum class Protocol { PriceTaking, Bargaining };

// Thrown when the requested run has no monetary steady state to simulate.
class NoEquilibriumError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct AgentState {
    double m = 0.0;       // dollars
    double a = 0.0;       // assets
    double s = 0.0;       // securitized units
    bool seller = false;  // drew the low payoff this period
    bool entered = false;
};

struct PeriodRecord {
    long period = 0;
    double Q = 0.0;        // units reallocated per capita
    double price = 0.0;    // dollars per unit
    double surplus = 0.0;  // payoff gain per capita
    // Signed transfer sums; both must net to ~0 within each session.
    double money_net = 0.0;
    double securities_net = 0.0;
};

struct SimStats {
    double mean_Q = 0.0;
    double se_Q = 0.0;  // sample std of per-period Q over sqrt(periods)
    double mean_price = 0.0;
    double surplus = 0.0;  // mean per-period surplus
    double se_surplus = 0.0;
    long periods = 0;
    int agents = 0;
    std::uint64_t seed = 0;
};

struct SimResult {
    SimStats stats;
    std::vector<PeriodRecord> periods;
};

// Monte-Carlo cross-section of the stationary equilibrium. Every period all
// N agents are re-endowed with the steady-state portfolio, draw the high or
// low payoff with equal probability, and enter the trading market
// independently with probability lambda.
//
// PriceTaking: entrants trade at the analytic market price; the long side is
// rationed pro rata. Bargaining: entrants are paired uniformly at random (an
// odd entrant sits out) and mixed pairs trade the Nash split.
//
// Sequential and deterministic: one mt19937_64 stream drawn in a fixed
// order (type then entry per agent, then the pairing shuffle).
//
// Throws std::invalid_argument for N < 2, T < 1, or odd N with Bargaining;
// NoEquilibriumError when no monetary steady state exists (PriceTaking).
SimResult run_simulation(const ModelParams& p, int N, long T,
                         std::uint64_t seed, Protocol proto);

}  // namespace ilm
