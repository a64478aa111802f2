#include "ilm/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace ilm {

LinearMap real_balance_map(const ModelParams& p) {
    const DerivedCoefficients c = derive_coefficients(p);
    LinearMap map;
    map.intercept = -(p.beta * (c.alpha_sum + p.R) + (1.0 - p.beta) * p.y_L) *
                    p.A / (2.0 * p.beta);
    map.slope = (2.0 + p.mu) / (2.0 * p.beta);
    return map;
}

double asset_price_step(double psi, const ModelParams& p) {
    const double pivot = 1.0 + p.mu - 2.0 * p.beta;
    if (std::abs(pivot) < 1e-12)
        throw std::domain_error(
            "asset_price_step: map singular at mu = 2 beta - 1");
    const double mix = (1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L;
    const double level =
        (0.5 * p.beta * mix - (1.0 + p.mu - p.beta) * p.y_L) / pivot;
    return level - psi / pivot;
}

PathReport simulate_path(double z0, long T, const LinearMap& map,
                         const ModelParams& p, double escape_factor) {
    if (T < 0) throw std::invalid_argument("simulate_path: T < 0");

    PathReport rep;
    rep.z_fixed = map.fixed_point();
    const double scale = std::max(1.0, std::abs(rep.z_fixed));
    rep.stationary = std::abs(z0 - rep.z_fixed) <= 1e-12 * scale;
    rep.divergent = !rep.stationary && std::abs(map.slope) > 1.0;
    const double threshold = escape_factor * scale;

    rep.states.reserve(static_cast<size_t>(T) + 1);
    double z = z0;
    for (long t = 0; t <= T; ++t) {
        rep.states.push_back({t, z, z / p.A - p.y_L});
        if (!rep.escape_t && std::abs(z - rep.z_fixed) > threshold)
            rep.escape_t = t;
        if (!rep.first_negative_t && z < 0.0) rep.first_negative_t = t;
        z = map.intercept + map.slope * z;
    }
    return rep;
}

}  // namespace ilm
