#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "photonfield/decay_fit.hpp"

using namespace photonfield;

namespace {

const CutoffSpec kSharp{1.0, Taper::sharp, 0.5};
const CutoffSpec kBump{1.0, Taper::smooth_bump, 0.5};

SampledProfile synthetic(const std::vector<double>& radii, double (*f)(double)) {
    SampledProfile p;
    p.radii = radii;
    for (double r : radii) p.values.push_back(f(r));
    p.kind = ProfileKind::h;
    return p;
}

}  // namespace

TEST_CASE("exact power law is recovered to machine precision") {
    const auto grid = geometric_grid(1.0, 1000.0, 120);
    const auto profile = synthetic(grid, [](double r) { return std::pow(r, -2.5); });
    const auto fit = fit_decay_exponent(profile, {1.0, 1000.0}, false);
    CHECK(fit.exponent == doctest::Approx(-2.5).epsilon(1e-10));
    CHECK(fit.residual < 1e-12);
    CHECK(fit.amplitude == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_FALSE(fit.envelope_used);
}

TEST_CASE("envelope fit on a synthetic oscillatory power law") {
    const auto grid = uniform_grid(50.0, 500.0, 4000);
    const auto profile =
        synthetic(grid, [](double r) { return std::cos(r) / (r * r); });
    const auto fit = fit_decay_exponent(profile, {50.0, 500.0}, true);
    CHECK(fit.envelope_used);
    CHECK(fit.exponent == doctest::Approx(-2.0).epsilon(0.01));
}

TEST_CASE("fit error contracts") {
    const auto few = geometric_grid(1.0, 10.0, 10);
    CHECK_THROWS_AS(
        fit_decay_exponent(synthetic(few, [](double r) { return 1.0 / r; }), {1.0, 10.0}, false),
        InsufficientSamples);

    auto grid = geometric_grid(1.0, 100.0, 50);
    auto zeroed = synthetic(grid, [](double r) { return 1.0 / r; });
    zeroed.values[25] = 0.0;
    CHECK_THROWS_AS(fit_decay_exponent(zeroed, {1.0, 100.0}, false), NonPositiveValues);

    // Too few peaks for an envelope fit on a monotone profile.
    CHECK_THROWS_AS(
        fit_decay_exponent(synthetic(grid, [](double r) { return 1.0 / r; }), {1.0, 100.0}, true),
        InsufficientSamples);
}

TEST_CASE("asymptotic tails of h under smooth and sharp cutoffs") {
    const auto smooth_profile =
        sample_profile(kBump, ProfileKind::h, geometric_grid(50.0, 500.0, 200));
    const auto smooth_fit = fit_decay_exponent(smooth_profile, {50.0, 500.0}, false);
    CHECK(smooth_fit.exponent == doctest::Approx(-2.5).epsilon(0.02));
    // Endpoint-dominated asymptote: constant sign over the whole window.
    CHECK(count_sign_changes(smooth_profile) == 0);

    const auto sharp_profile =
        sample_profile(kSharp, ProfileKind::h, uniform_grid(50.0, 500.0, 4000));
    CHECK(count_sign_changes(sharp_profile) >= 100);
    const auto sharp_fit = fit_decay_exponent(sharp_profile, {50.0, 500.0}, true);
    CHECK(sharp_fit.exponent == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("htilde and gradient decay (smooth cutoff)") {
    const auto grid = geometric_grid(50.0, 500.0, 200);
    const auto ht = sample_profile(kBump, ProfileKind::htilde, grid);
    CHECK(fit_decay_exponent(ht, {50.0, 500.0}, false).exponent ==
          doctest::Approx(-1.5).epsilon(0.02));
    const auto grad = sample_profile(kBump, ProfileKind::htilde_grad, grid);
    CHECK(fit_decay_exponent(grad, {50.0, 500.0}, false).exponent ==
          doctest::Approx(-2.5).epsilon(0.03));
}

TEST_CASE("weighted tail diagnostic on synthetic tails") {
    const auto grid = geometric_grid(1.0, 1024.0, 400);

    // |h| = r^(-5/2), gamma = 0.5: integrand r^(-2), block contributions halve.
    const auto fast = synthetic(grid, [](double r) { return std::pow(r, -2.5); });
    CHECK(weighted_tail_diagnostic(fast, 0.5) == doctest::Approx(0.5).epsilon(0.02));

    // Same tail at the borderline gamma = 1: logarithmic, blocks constant.
    CHECK(weighted_tail_diagnostic(fast, 1.0) == doctest::Approx(1.0).epsilon(0.02));

    // |h| = r^(-2) at gamma = 1: integrand r^0, blocks double (divergent).
    const auto slow = synthetic(grid, [](double r) { return std::pow(r, -2.0); });
    CHECK(weighted_tail_diagnostic(slow, 1.0) == doctest::Approx(2.0).epsilon(0.02));

    CHECK_THROWS_AS(weighted_tail_diagnostic(synthetic(geometric_grid(1.0, 2.0, 30),
                                                       [](double r) { return 1.0 / r; }),
                                             0.5),
                    InsufficientSamples);
}

TEST_CASE("tail diagnostic along a polarized ray") {
    // Directional spot-check of the square-integrability claim at gamma = 0.9.
    const auto grid = geometric_grid(1.0, 45.0, 120);
    const auto ray =
        sample_polarized_ray(kBump, 2, 3, Vec3(1, 1, 0).normalized(), grid);
    const double at_point_nine = weighted_tail_diagnostic(ray, 0.9);
    CHECK(at_point_nine < 1.0);
    // A smaller weight exponent converges faster along the same ray.
    CHECK(weighted_tail_diagnostic(ray, 0.5) < at_point_nine);
}
