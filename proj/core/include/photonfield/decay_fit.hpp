#pragma once

#include <utility>

#include "photonfield/coupling.hpp"

namespace photonfield {

// Result of a log-log power-law regression |value| ~ amplitude * r^exponent.
struct DecayFit {
    double exponent = 0.0;
    double amplitude = 0.0;
    std::pair<double, double> r_window{0.0, 0.0};
    double residual = 0.0;  // rms residual of the log-log fit
    bool envelope_used = false;
};

// Least-squares slope of log|value| against log r over the window. With
// envelope = true the regression runs over local maxima of |value| (refined by
// a parabola through the three bracketing log-log points), which is the only
// meaningful notion of decay for sign-alternating sharp-cutoff tails; at
// least 30 peaks are required in that mode.
DecayFit fit_decay_exponent(const SampledProfile& profile, std::pair<double, double> r_window,
                            bool envelope);

int count_sign_changes(const SampledProfile& profile);

// Directional convergence spot-check of Int r^(2 gamma) |value|^2 r^2 dr:
// trapezoidal contributions are accumulated over dyadic radius blocks and the
// ratio of the last two complete blocks is returned. Ratio < 1 indicates a
// converging tail along this ray; this is a one-ray diagnostic, not a proof
// of finiteness of the 3D integral.
double weighted_tail_diagnostic(const SampledProfile& profile, double gamma);

}  // namespace photonfield
