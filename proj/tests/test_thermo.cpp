#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "photonfield/thermo.hpp"

using namespace photonfield;

TEST_CASE("Planck integral density hits the closed form") {
    const double expected = -M_PI * M_PI / 90.0;
    CHECK(planck_integral_density(1.0) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(planck_integral_density(1.0) < 0.0);
}

TEST_CASE("density scales exactly as theta cubed") {
    const double d1 = planck_integral_density(1.0);
    for (double theta : {0.5, 1.0, 2.0, 4.0}) {
        CHECK(planck_integral_density(theta) / (theta * theta * theta) ==
              doctest::Approx(d1).epsilon(1e-10));
    }
}

TEST_CASE("finite-box sum converges to the integral as L theta grows") {
    const double d1 = std::abs(planck_integral_density(1.0));
    double prev_err = -1.0;
    for (double L : {4.0 * M_PI, 8.0 * M_PI, 16.0 * M_PI, 32.0 * M_PI}) {
        const double err =
            std::abs(finite_box_density(L, 1.0) - planck_integral_density(1.0)) / d1;
        if (prev_err > 0.0) CHECK(err < 0.6 * prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-4);  // 32 pi box: measured ~3e-5

    // Spectral gap 2 pi / L >> theta: the box sum is exponentially suppressed.
    CHECK(std::abs(finite_box_density(0.25, 1.0)) < 1e-6 * d1);
}

TEST_CASE("free-energy assembly and sign conventions") {
    const ThermalParams params{2.0, 5.0};
    const auto three =
        assemble_free_energy(params, 3, FreeEnergyMethod::integral, SignConvention::standard);
    CHECK(three.n_channels == 3);
    CHECK(three.per_mode_density == doctest::Approx(planck_integral_density(2.0)));
    CHECK(three.total == doctest::Approx(3.0 * 5.0 * three.per_mode_density).epsilon(1e-15));
    CHECK(three.total < 0.0);

    const auto two =
        assemble_free_energy(params, 2, FreeEnergyMethod::integral, SignConvention::standard);
    CHECK(three.total / two.total == doctest::Approx(1.5).epsilon(1e-14));

    const auto flipped =
        assemble_free_energy(params, 3, FreeEnergyMethod::integral, SignConvention::paper);
    CHECK(flipped.total == doctest::Approx(-three.total).epsilon(1e-15));

    // Mode-sum assembly agrees with the integral once the box is large.
    const double side = 8.0 * M_PI;
    const ThermalParams big{2.0, side * side * side};
    const auto via_integral =
        assemble_free_energy(big, 3, FreeEnergyMethod::integral, SignConvention::standard);
    const auto via_sum =
        assemble_free_energy(big, 3, FreeEnergyMethod::mode_sum, SignConvention::standard);
    CHECK(via_sum.total == doctest::Approx(via_integral.total).epsilon(1e-3));
}

TEST_CASE("three-minus-two channel subtraction leaves one scalar channel") {
    CHECK(subtraction_identity_check(8.0 * M_PI, 1.0) < 1e-12);
    CHECK(subtraction_identity_check(4.0 * M_PI, 0.7) < 1e-12);

    // Negative control: unequal channel weights break the identity.
    CHECK(subtraction_identity_check_weighted(8.0 * M_PI, 1.0, {1.0, 1.0, 2.0}) > 0.1);
}

TEST_CASE("thermodynamics error contracts") {
    CHECK_THROWS_AS(ThermalParams({-1.0, 1.0}).validate(), NonPositiveTemperature);
    CHECK_THROWS_AS(ThermalParams({0.0, 1.0}).validate(), NonPositiveTemperature);
    CHECK_THROWS(ThermalParams({1.0, 0.0}).validate());
    CHECK_THROWS_AS(finite_box_density(64.0 * M_PI, 1.0, 100), ModeBudgetExceeded);
}
