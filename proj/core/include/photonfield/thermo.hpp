#pragma once

#include <array>
#include <string>

#include "photonfield/errors.hpp"

namespace photonfield {

// Dimensionless temperature theta = k_B T / (hbar c) and box volume, hbar = c = 1.
struct ThermalParams {
    double theta = 1.0;
    double volume = 1.0;

    void validate() const {
        if (!(theta > 0.0)) throw NonPositiveTemperature(theta);
        if (!(volume > 0.0)) throw std::invalid_argument("volume must be positive");
    }
};

enum class FreeEnergyMethod { integral, mode_sum };
enum class SignConvention { standard, paper };

std::string method_name(FreeEnergyMethod m);
std::string sign_name(SignConvention s);

// Per-channel dimensionless density
//   d(theta) = (1 / 2 pi^2) Int_0^inf kappa^2 ln(1 - exp(-kappa/theta)) dkappa
//            = theta^3 * d(1),   d(1) = -pi^2/90.
// Computed by quadrature in the scaled variable (the theta^3 scaling is exact
// by substitution); d(theta) < 0.
double planck_integral_density(double theta);

// (1/L^3) sum over lattice modes k = 2 pi n / L, n != 0, of ln(1 - e^(-|k|/theta)),
// per channel. The zero mode is excluded (the summand diverges there and the
// continuum integral is insensitive to it). Terms below 1e-16 in magnitude are
// truncated; mode_guard bounds the enumerated octant volume.
double finite_box_density(double L, double theta, long long mode_guard = 400'000'000LL);

struct FreeEnergyResult {
    double per_mode_density = 0.0;  // single-channel density d
    double total = 0.0;             // F / (k_B T) for the requested assembly
    int n_channels = 0;
    FreeEnergyMethod method = FreeEnergyMethod::integral;
    SignConvention sign = SignConvention::standard;
};

// F/(k_B T) = n_channels * volume * d(theta) under the standard convention;
// the paper-sign assembly flips the overall sign. Total is exactly n_channels
// times the single-channel value by construction.
FreeEnergyResult assemble_free_energy(const ThermalParams& params, int n_channels,
                                      FreeEnergyMethod method, SignConvention sign);

// |F3 - F2 - F_scalar| / |F_scalar| with per-channel mode sums; zero up to
// floating-point noise when all channel weights are equal.
double subtraction_identity_check(double L, double theta);

// Channel weights are exposed for the negative-control test.
double subtraction_identity_check_weighted(double L, double theta,
                                           const std::array<double, 3>& channel_weights);

}  // namespace photonfield
