#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "photonfield/errors.hpp"

namespace photonfield {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Momentum-space wavevector, hbar = c = 1 units.
struct Wavevector {
    Vec3 k;

    double norm() const { return k.norm(); }
    // Distance from the x3-axis, where the standard polarization choice is singular.
    double rho() const { return std::hypot(k.x(), k.y()); }
    Vec3 unit() const {
        const double n = norm();
        if (n == 0.0) throw ZeroWavevector();
        return k / n;
    }
};

// Right-handed orthonormal frame (eps1, eps2, khat) for one wavevector.
struct PolarizationBasis {
    Vec3 eps1;
    Vec3 eps2;
    Vec3 khat;
    bool fallback_used = false;  // true when k sits on the x3-axis
};

// Symmetric projector onto the plane perpendicular to k.
struct Projector3 {
    Mat3 m;
};

// Standard choice eps1 = (k2, -k1, 0)/sqrt(k1^2+k2^2), eps2 = khat x eps1.
// On the x3-axis the formula is undefined; the caller-supplied fallback vector
// is projected orthogonal to khat and the result is flagged.
PolarizationBasis make_polarization_basis(const Wavevector& k, const Vec3& axis_fallback = Vec3::UnitX());

Projector3 transverse_projector(const Wavevector& k);

// Max entrywise deviation between sum_lambda eps_lambda eps_lambda^T and I - khat khat^T.
double verify_completeness(const Wavevector& k, const Vec3& axis_fallback = Vec3::UnitX());

// khat x v; annihilates the longitudinal part of v.
Vec3 cross_coupling(const Wavevector& k, const Vec3& v);

template <typename Scalar>
struct ModeComponents {
    Scalar a1;  // eps1 . a
    Scalar a2;  // eps2 . a
    Scalar a0;  // khat . a (scalar mode)
};

template <typename Scalar>
ModeComponents<Scalar> two_mode_reduction(const Wavevector& k, const Eigen::Matrix<Scalar, 3, 1>& a,
                                          const Vec3& axis_fallback = Vec3::UnitX()) {
    const PolarizationBasis b = make_polarization_basis(k, axis_fallback);
    return {b.eps1.cast<Scalar>().dot(a), b.eps2.cast<Scalar>().dot(a), b.khat.cast<Scalar>().dot(a)};
}

// Central-difference Frobenius norm of the Jacobian of eps1(k).
// Diverges like 1/rho near the x3-axis; throws SingularAxis when rho < 10*step.
double polarization_gradient_norm(const Wavevector& k, double step);

}  // namespace photonfield
