#pragma once

#include <functional>
#include <span>
#include <vector>

#include "photonfield/errors.hpp"

namespace photonfield::quad {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule of the given order, cached. Nodes are found by Newton
// iteration on the Legendre recurrence; results are deterministic.
const GaussRule& gauss_legendre(int order);

// Single-panel Gauss-Legendre.
double panel(const std::function<double(double)>& f, double a, double b, int order = 16);

// Composite rule over consecutive panels [breaks[i], breaks[i+1]].
double composite(const std::function<double(double)>& f, std::span<const double> breaks, int order = 16);

// Composite rule over [a, b] with n equal panels.
double composite_uniform(const std::function<double(double)>& f, double a, double b, int n, int order = 16);

enum class Trig { sine, cosine };

// Oscillation-aware integral of amp(kappa) * trig(kappa * omega) over
// [0, upper]. Panels never span more than half an oscillation period, so a
// fixed-order Gauss rule resolves each panel to near machine precision; the
// alternating panel sums carry the cancellation explicitly instead of leaving
// it to an adaptive error estimator. The first region (up to the first
// interior breakpoint) is mapped through kappa = u^2 so integrable
// kappa^(p) endpoint behavior with p > -1 is handled smoothly.
//
// interior_breaks must be strictly inside (0, upper) and sorted; pass the
// cutoff taper edge here so limited smoothness never straddles a panel.
double fourier_integral(const std::function<double(double)>& amp, Trig trig, double omega,
                        double upper, std::span<const double> interior_breaks);

}  // namespace photonfield::quad
