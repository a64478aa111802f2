#include "ilm/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ilm/bargaining.hpp"
#include "ilm/dfm.hpp"
#include "ilm/steady_state.hpp"

namespace ilm {

namespace {

// Uniform in [0,1) built from the raw 64-bit stream, so draws do not depend
// on library-specific distribution internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

struct Moments {
    double mean = 0.0;
    double se = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    const double n = static_cast<double>(xs.size());
    for (double x : xs) m.mean += x;
    m.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return m;
}

}  // namespace

SimResult run_simulation(const ModelParams& p, int N, long T,
                         std::uint64_t seed, Protocol proto) {
    if (N < 2) throw std::invalid_argument("run_simulation: N must be >= 2");
    if (T < 1) throw std::invalid_argument("run_simulation: T must be >= 1");
    if (proto == Protocol::Bargaining && N % 2 != 0)
        throw std::invalid_argument(
            "run_simulation: N must be even under bargaining "
            "(pairing undefined)");

    // Stationary endowment and session prices, fixed across periods.
    double s_endow = 0.0, psi = 0.0, phi = 0.0, p_star = 0.0;
    BargainingOutcome split;  // per-meeting transfers (bargaining only)
    if (proto == Protocol::PriceTaking) {
        const SolveResult sol = solve_steady_state(p);
        if (sol.status != SolveStatus::Monetary)
            throw NoEquilibriumError("run_simulation: " + sol.note);
        const SteadyState& ss = *sol.state;
        s_endow = ss.s_star;
        psi = ss.psi_star;
        phi = ss.z_star / p.M;
        p_star = clear_market(s_endow, p.M, psi, phi, p).p_star;
    } else {
        const BargainingEquilibrium eq = solve_bargaining_equilibrium(p);
        s_endow = eq.s_star;
        psi = eq.psi_star;
        if (eq.regime == ReturnsRegime::Good) {
            phi = eq.z_star / p.M;
            split = nash_bargain(p.M, s_endow, psi, phi, p);
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<AgentState> agents(static_cast<std::size_t>(N));
    std::vector<std::size_t> entrants;
    entrants.reserve(static_cast<std::size_t>(N));

    SimResult result;
    result.periods.reserve(static_cast<std::size_t>(T));
    std::vector<double> q_series, surplus_series;
    q_series.reserve(static_cast<std::size_t>(T));
    surplus_series.reserve(static_cast<std::size_t>(T));
    double units_traded_total = 0.0;
    double dollars_traded_total = 0.0;

    const double dy = p.y_H - p.y_L;

    for (long t = 0; t < T; ++t) {
        entrants.clear();
        std::size_t sellers_in = 0;
        for (std::size_t i = 0; i < agents.size(); ++i) {
            AgentState& ag = agents[i];
            ag.m = p.M;
            ag.a = p.A;
            ag.s = s_endow;
            ag.seller = uniform01(rng) < 0.5;
            ag.entered = uniform01(rng) < p.lambda;
            if (ag.entered) {
                entrants.push_back(i);
                if (ag.seller) ++sellers_in;
            }
        }

        PeriodRecord rec;
        rec.period = t;
        double paid = 0.0, received = 0.0, sold = 0.0, bought = 0.0;

        if (proto == Protocol::PriceTaking) {
            const double n_sell = static_cast<double>(sellers_in);
            const double n_buy =
                static_cast<double>(entrants.size() - sellers_in);
            const double supply_units = n_sell * s_endow;
            const double demand_units = n_buy * (p.M / p_star);
            const double executed = std::min(supply_units, demand_units);
            const double sell_frac =
                supply_units > 0.0 ? executed / supply_units : 0.0;
            const double buy_frac =
                demand_units > 0.0 ? executed / demand_units : 0.0;
            for (std::size_t i : entrants) {
                AgentState& ag = agents[i];
                if (ag.seller) {
                    const double q = ag.s * sell_frac;
                    ag.s -= q;
                    ag.m += p_star * q;
                    sold += q;
                    received += p_star * q;
                } else {
                    const double pay = ag.m * buy_frac;
                    const double q = pay / p_star;
                    ag.m -= pay;
                    ag.s += q;
                    bought += q;
                    paid += pay;
                }
            }
            rec.price = p_star;
            units_traded_total += sold;
            dollars_traded_total += received;
        } else {
            // Uniform pairing: Fisher-Yates on the entrant list, then pair
            // neighbours; a trailing odd entrant sits the round out.
            for (std::size_t i = entrants.size(); i > 1; --i)
                std::swap(entrants[i - 1], entrants[uniform_index(rng, i)]);
            for (std::size_t k = 0; k + 1 < entrants.size(); k += 2) {
                AgentState& x = agents[entrants[k]];
                AgentState& y = agents[entrants[k + 1]];
                if (x.seller == y.seller) continue;
                AgentState& sel = x.seller ? x : y;
                AgentState& buy = x.seller ? y : x;
                sel.s -= split.d_s;
                sel.m += split.d_m;
                buy.s += split.d_s;
                buy.m -= split.d_m;
                sold += split.d_s;
                bought += split.d_s;
                received += split.d_m;
                paid += split.d_m;
            }
            units_traded_total += sold;
            dollars_traded_total += received;
            rec.price = split.d_s > 0.0 ? split.d_m / split.d_s : 0.0;
        }

        rec.Q = sold / static_cast<double>(N);
        rec.surplus = rec.Q * dy;
        rec.money_net = received - paid;
        rec.securities_net = bought - sold;
        q_series.push_back(rec.Q);
        surplus_series.push_back(rec.surplus);
        result.periods.push_back(rec);
    }

    const Moments mq = moments(q_series);
    const Moments ms = moments(surplus_series);
    result.stats.mean_Q = mq.mean;
    result.stats.se_Q = mq.se;
    result.stats.surplus = ms.mean;
    result.stats.se_surplus = ms.se;
    result.stats.periods = T;
    result.stats.agents = N;
    result.stats.seed = seed;
    if (proto == Protocol::PriceTaking)
        result.stats.mean_price = p_star;  // posted price, every session
    else
        result.stats.mean_price = units_traded_total > 0.0
                                      ? dollars_traded_total / units_traded_total
                                      : 0.0;
    return result;
}

}  // namespace ilm
