#pragma once

#include <complex>
#include <string>
#include <vector>

#include "photonfield/cutoff.hpp"
#include "photonfield/geometry.hpp"

namespace photonfield {

enum class ProfileKind { h, htilde, htilde_grad, h_polarized };

std::string profile_kind_name(ProfileKind k);

// Radial samples of a coupling function along increasing radii.
struct SampledProfile {
    std::vector<double> radii;   // strictly increasing, > 0
    std::vector<double> values;  // same length
    CutoffSpec cutoff;
    ProfileKind kind = ProfileKind::h;
};

// The common radial reduction of (1/2pi) * Int chi(|k|) |k|^(-alpha) e^(-ik.y) dk
// for a radial cutoff: value = (2/r) * Int_0^Lambda chi(kappa) kappa^(1-alpha) sin(kappa r) dkappa.
// alpha = 1/2 gives h, alpha = 3/2 gives htilde. Validated against the direct
// 3D quadrature oracle in the test suite.
double radial_transform(const CutoffSpec& spec, double alpha, double r);

// r -> 0 limit of radial_transform: 2 * Int_0^Lambda chi(kappa) kappa^(2-alpha) dkappa.
double value_at_origin(const CutoffSpec& spec, double alpha);

double compute_h(const CutoffSpec& spec, double r);
double compute_htilde(const CutoffSpec& spec, double r);

// Radial derivative d htilde / dr, differentiated under the integral sign:
// -htilde(r)/r + (2/r) * Int chi(kappa) kappa^(1/2) cos(kappa r) dkappa.
double compute_htilde_gradient(const CutoffSpec& spec, double r);

// Polarized coupling function h^i_lambda(y) = (1/2pi) Int chi |k|^(-1/2) eps^i_lambda(k) e^(-ik.y) dk
// with the standard polarization choice. The azimuthal integral is carried out
// analytically (Bessel J0/J1 kernels), leaving a 2D oscillation-aware quadrature.
//
// Parity in k forces the integral to be purely real for lambda = 2 and purely
// imaginary for lambda = 1 (eps1(-k) = -eps1(k)). `value` carries the
// symmetry-allowed component and `residual` the magnitude of the component
// that must vanish; residual > ~1e-8 indicates a quadrature problem.
struct PolarizedValue {
    double value;
    double residual;
};

PolarizedValue compute_h_polarized(const CutoffSpec& spec, int lambda_index, int component,
                                   const Vec3& y);

// Full complex integral, used by the oracle cross-checks.
std::complex<double> compute_h_polarized_complex(const CutoffSpec& spec, int lambda_index,
                                                 int component, const Vec3& y);

// Geometric radius grid in [rmin, rmax] with the given number of points.
std::vector<double> geometric_grid(double rmin, double rmax, int points);

// Uniform radius grid (dense sampling for oscillatory envelopes).
std::vector<double> uniform_grid(double rmin, double rmax, int points);

SampledProfile sample_profile(const CutoffSpec& spec, ProfileKind kind,
                              const std::vector<double>& radii);

// |h^i_lambda| sampled along the ray r * direction.
SampledProfile sample_polarized_ray(const CutoffSpec& spec, int lambda_index, int component,
                                    const Vec3& direction, const std::vector<double>& radii);

}  // namespace photonfield
