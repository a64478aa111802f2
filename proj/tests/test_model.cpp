#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "ilm/model.hpp"
#include "support.hpp"

using namespace ilm;

namespace {

bool has_error_containing(const ValidatedParams& v, const std::string& piece) {
    return std::any_of(v.errors.begin(), v.errors.end(),
                       [&](const std::string& e) {
                           return e.find(piece) != std::string::npos;
                       });
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("canonical parameters validate with the alpha1 warning") {
    const ValidatedParams v = validate_params(testsup::canonical());
    REQUIRE(v.ok());
    CHECK(v.errors.empty());
    REQUIRE(v.warnings.size() == 1);
    CHECK(v.warnings[0] == "alpha1 = 0.5 > 0");
}

TEST_CASE("each bound violation is reported with its field") {
    ModelParams p = testsup::canonical();

    SUBCASE("beta above one") {
        p.beta = 1.1;
        const auto v = validate_params(p);
        CHECK(!v.ok());
        CHECK(has_error_containing(v, "beta"));
        CHECK(has_error_containing(v, "out of (0,1)"));
    }
    SUBCASE("beta NaN lands in the error list") {
        p.beta = std::nan("");
        CHECK(has_error_containing(validate_params(p), "beta"));
    }
    SUBCASE("payoff ordering") {
        p.y_L = 2.0;
        p.y_H = 1.0;
        CHECK(has_error_containing(validate_params(p), "y_L < y_H violated"));
    }
    SUBCASE("high payoff must beat the dividend") {
        p.y_H = 3.0;
        p.R = 3.5;
        CHECK(has_error_containing(validate_params(p), "y_H > R violated"));
    }
    SUBCASE("negative R") {
        p.R = -1.0;
        CHECK(has_error_containing(validate_params(p), "R"));
    }
    SUBCASE("lambda outside the unit interval") {
        p.lambda = 1.5;
        CHECK(has_error_containing(validate_params(p), "lambda"));
    }
    SUBCASE("theta at the boundary is rejected") {
        p.theta = 0.0;
        CHECK(has_error_containing(validate_params(p), "theta"));
    }
    SUBCASE("mu below the Friedman rule") {
        p.mu = p.beta - 1.0 - 1e-6;
        const auto v = validate_params(p);
        CHECK(has_error_containing(v, "below beta - 1"));
        CHECK(has_error_containing(v, "money would dominate"));
    }
    SUBCASE("non-positive supplies") {
        p.A = 0.0;
        p.M = -2.0;
        const auto v = validate_params(p);
        CHECK(has_error_containing(v, "A"));
        CHECK(has_error_containing(v, "M"));
    }
    SUBCASE("several violations are all reported") {
        p.beta = 2.0;
        p.R = -1.0;
        p.lambda = -0.5;
        CHECK(validate_params(p).errors.size() >= 3);
    }
}

TEST_CASE("mu at exactly beta - 1 is admissible") {
    ModelParams p = testsup::canonical();
    p.mu = p.beta - 1.0;
    CHECK(validate_params(p).ok());
}

TEST_CASE("derived coefficients at the canonical point") {
    const DerivedCoefficients c = derive_coefficients(testsup::canonical());
    CHECK(c.alpha1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c.alpha2 == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(c.alpha_sum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("alpha_sum computed two ways agrees to 1e-14 relative") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p =
            i % 2 == 0 ? testsup::draw_active(rng) : testsup::draw_no_trade(rng);
        const DerivedCoefficients c = derive_coefficients(p);
        const double direct =
            0.5 * ((1.0 + p.lambda) * p.y_H + (1.0 - p.lambda) * p.y_L) - p.R;
        const double scale = std::max({1.0, std::abs(c.alpha_sum),
                                       std::abs(direct)});
        CHECK(std::abs(c.alpha_sum - direct) <= 1e-14 * scale);
    }
}

TEST_CASE("alpha2 vanishes exactly when lambda does") {
    ModelParams p = testsup::canonical();
    p.lambda = 0.0;
    CHECK(derive_coefficients(p).alpha2 == 0.0);
    p.lambda = 0.25;
    CHECK(derive_coefficients(p).alpha2 > 0.0);
}

TEST_CASE("fundamental price worked values") {
    ModelParams p;
    p.beta = 0.9;
    p.R = 1.0;
    CHECK(fundamental_price(p) == doctest::Approx(9.0).epsilon(1e-14));
    p.beta = 0.5;
    CHECK(fundamental_price(p) == doctest::Approx(1.0).epsilon(1e-14));
    p.beta = 0.96;
    p.R = 2.0;
    CHECK(fundamental_price(p) == doctest::Approx(48.0).epsilon(1e-13));
}

TEST_CASE("fundamental price rises with beta and with R") {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 200; ++i) {
        ModelParams p = testsup::draw_active(rng);
        const double base = fundamental_price(p);
        ModelParams up_beta = p;
        up_beta.beta = p.beta + 1e-4 * (1.0 - p.beta);
        ModelParams up_r = p;
        up_r.R = p.R * (1.0 + 1e-4);
        CHECK(fundamental_price(up_beta) > base);
        CHECK(fundamental_price(up_r) > base);
    }
}

TEST_CASE("case labels follow the sign of alpha_sum") {
    DerivedCoefficients c;
    c.alpha_sum = -0.1;
    CHECK(classify_case(c) == CaseLabel::NoTrade);
    c.alpha_sum = 0.5;
    CHECK(classify_case(c) == CaseLabel::Active);
    c.alpha_sum = 0.0;
    CHECK(classify_case(c) == CaseLabel::KnifeEdge);
    c.alpha_sum = 5e-13;
    CHECK(classify_case(c) == CaseLabel::KnifeEdge);
    c.alpha_sum = -5e-13;
    CHECK(classify_case(c) == CaseLabel::KnifeEdge);
    c.alpha_sum = 2e-12;
    CHECK(classify_case(c) == CaseLabel::Active);
}

TEST_CASE("labels render to their display names") {
    CHECK(to_string(CaseLabel::NoTrade) == "NoTradeCase");
    CHECK(to_string(CaseLabel::KnifeEdge) == "KnifeEdgeCase");
    CHECK(to_string(CaseLabel::Active) == "ActiveCase");
}

TEST_CASE("classification ignores the money-stock scale") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
        ModelParams p = testsup::draw_active(rng);
        const CaseLabel base = classify_case(derive_coefficients(p));
        p.M *= 1000.0;
        CHECK(classify_case(derive_coefficients(p)) == base);
        p.M *= 1e-9;
        CHECK(classify_case(derive_coefficients(p)) == base);
    }
}

}  // TEST_SUITE
