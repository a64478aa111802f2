#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ilm/dynamics.hpp"
#include "ilm/steady_state.hpp"
#include "ilm/util.hpp"
#include "support.hpp"

using namespace ilm;

TEST_SUITE("dynamics") {

TEST_CASE("canonical map coefficients") {
    const LinearMap map = real_balance_map(testsup::canonical());
    CHECK(map.intercept == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(map.slope == doctest::Approx(10.0 / 9.0).epsilon(1e-14));
    CHECK(map.fixed_point() == doctest::Approx(13.5).epsilon(1e-12));
}

TEST_CASE("map slope always expands") {
    std::mt19937_64 rng(501);
    for (int i = 0; i < 300; ++i) {
        const ModelParams p = testsup::draw_active(rng);
        CHECK(real_balance_map(p).slope > 1.0);
    }
}

TEST_CASE("fixed point matches the stationary real balances") {
    std::mt19937_64 rng(502);
    for (int i = 0; i < 300; ++i) {
        const ModelParams p = testsup::draw_active(rng);
        const double z_star = (steady_state_asset_price(p) + p.y_L) * p.A;
        CHECK(close_rel(real_balance_map(p).fixed_point(), z_star, 1e-10));
    }
}

TEST_CASE("distance from the fixed point grows exactly geometrically") {
    std::mt19937_64 rng(503);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = testsup::draw_active(rng);
        const LinearMap map = real_balance_map(p);
        const double z_fix = map.fixed_point();
        const double d0 = testsup::uniform(rng, 1e-6, 1e-3) *
                          std::max(1.0, std::abs(z_fix));
        const PathReport rep =
            simulate_path(z_fix + d0, 50, map, p,
                          std::numeric_limits<double>::infinity());
        REQUIRE(rep.states.size() == 51);
        double expected = d0;
        for (const PathState& st : rep.states) {
            CHECK(close_rel(st.z - z_fix, expected, 1e-9));
            expected *= map.slope;
        }
    }
}

TEST_CASE("path bookkeeping flags") {
    const ModelParams p = testsup::canonical();
    const LinearMap map = real_balance_map(p);
    const double z_fix = map.fixed_point();

    SUBCASE("starting at the fixed point is stationary") {
        const PathReport rep = simulate_path(z_fix, 20, map, p);
        CHECK(rep.stationary);
        CHECK(!rep.divergent);
        CHECK(!rep.escape_t.has_value());
        for (const PathState& st : rep.states)
            CHECK(close_rel(st.z, z_fix, 1e-9));
    }
    SUBCASE("any other start diverges and eventually escapes") {
        const PathReport rep = simulate_path(z_fix * 1.01, 400, map, p, 10.0);
        CHECK(!rep.stationary);
        CHECK(rep.divergent);
        REQUIRE(rep.escape_t.has_value());
        CHECK(*rep.escape_t > 0);
    }
    SUBCASE("paths below the fixed point hit negative balances") {
        const PathReport rep = simulate_path(z_fix * 0.9, 200, map, p, 1e9);
        REQUIRE(rep.first_negative_t.has_value());
        CHECK(rep.states[static_cast<std::size_t>(*rep.first_negative_t)].z <
              0.0);
    }
    SUBCASE("implied asset price tracks real balances") {
        const PathReport rep = simulate_path(z_fix, 5, map, p);
        for (const PathState& st : rep.states)
            CHECK(st.psi == doctest::Approx(st.z / p.A - p.y_L).epsilon(1e-14));
    }
    SUBCASE("negative horizon is rejected") {
        CHECK_THROWS_AS(simulate_path(z_fix, -1, map, p),
                        std::invalid_argument);
    }
}

TEST_CASE("price recurrence is singular only at mu = 2 beta - 1") {
    ModelParams p = testsup::canonical();
    p.beta = 0.6;
    p.mu = 2.0 * p.beta - 1.0;  // 0.2
    CHECK_THROWS_AS(asset_price_step(1.0, p), std::domain_error);
    p.mu = 0.21;
    CHECK_NOTHROW(asset_price_step(1.0, p));
}

TEST_CASE("stationary price is a fixed point of the price recurrence") {
    std::mt19937_64 rng(504);
    int tested = 0;
    while (tested < 200) {
        const ModelParams p = testsup::draw_active(rng);
        if (std::abs(1.0 + p.mu - 2.0 * p.beta) < 1e-6) continue;
        const double psi_star = steady_state_asset_price(p);
        CHECK(close_rel(asset_price_step(psi_star, p), psi_star, 1e-9));
        ++tested;
    }
}

TEST_CASE("price recurrence diverges monotonically where it expands") {
    std::mt19937_64 rng(505);
    int tested = 0;
    while (tested < 100) {
        const ModelParams p = testsup::draw_active(rng);
        const double pivot = 1.0 + p.mu - 2.0 * p.beta;
        // Expansion requires |pivot| < 1, bounded away from the singularity.
        if (std::abs(pivot) >= 0.95 || std::abs(pivot) < 1e-3) continue;
        const double psi_star = steady_state_asset_price(p);
        double psi = psi_star * 1.001 + 1e-3;
        double dist = std::abs(psi - psi_star);
        for (int t = 0; t < 8; ++t) {
            psi = asset_price_step(psi, p);
            const double next_dist = std::abs(psi - psi_star);
            CHECK(next_dist > dist);
            dist = next_dist;
        }
        ++tested;
    }
}

}  // TEST_SUITE
