#pragma once

#include <complex>

#include "photonfield/coupling.hpp"

namespace photonfield {

// Integrand selector for the brute-force oracle: the full 3D integrals
// (1/2pi) Int chi(|k|) w(k) e^(-ik.y) dk with w = |k|^(-1/2), |k|^(-3/2), or
// eps^i_lambda(k) |k|^(-1/2).
enum class OracleIntegrand { inv_sqrt, inv_three_half, polarized };

// Direct 3D tensor quadrature of the defining integral, refined until two
// successive resolutions agree within abs_tol. Ground truth for the reduced
// radial transforms and the Bessel-reduced polarized path; shares none of
// their analytic reductions. Test/verification use only; cost grows steeply
// with |y|, hence the |y| <= 50/Lambda precondition.
std::complex<double> oracle_direct_3d_complex(const CutoffSpec& spec, OracleIntegrand id,
                                              const Vec3& y, double abs_tol, int lambda_index = 1,
                                              int component = 1);

// Real-valued view matching the conventions of the reduced paths: the real
// part for the scalar integrands and lambda = 2, the imaginary part for
// lambda = 1 (see compute_h_polarized).
double oracle_direct_3d(const CutoffSpec& spec, OracleIntegrand id, const Vec3& y, double abs_tol,
                        int lambda_index = 1, int component = 1);

}  // namespace photonfield
