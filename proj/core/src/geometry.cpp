#include "photonfield/geometry.hpp"

namespace photonfield {

PolarizationBasis make_polarization_basis(const Wavevector& k, const Vec3& axis_fallback) {
    const double n = k.norm();
    if (n == 0.0) throw ZeroWavevector();
    const Vec3 khat = k.k / n;
    const double rho = k.rho();

    PolarizationBasis basis;
    basis.khat = khat;
    if (rho > 0.0) {
        basis.eps1 = Vec3(k.k.y(), -k.k.x(), 0.0) / rho;
        basis.fallback_used = false;
    } else {
        const Vec3 projected = axis_fallback - axis_fallback.dot(khat) * khat;
        const double pn = projected.norm();
        if (pn == 0.0) throw std::invalid_argument("axis fallback vector is parallel to k");
        basis.eps1 = projected / pn;
        basis.fallback_used = true;
    }
    basis.eps2 = khat.cross(basis.eps1);
    return basis;
}

Projector3 transverse_projector(const Wavevector& k) {
    const Vec3 khat = k.unit();
    return {Mat3::Identity() - khat * khat.transpose()};
}

double verify_completeness(const Wavevector& k, const Vec3& axis_fallback) {
    const PolarizationBasis b = make_polarization_basis(k, axis_fallback);
    const Mat3 lhs = b.eps1 * b.eps1.transpose() + b.eps2 * b.eps2.transpose();
    const Mat3 rhs = transverse_projector(k).m;
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

Vec3 cross_coupling(const Wavevector& k, const Vec3& v) {
    return k.unit().cross(v);
}

namespace {

// eps1 away from the axis, without any fallback handling.
Vec3 eps1_raw(const Vec3& k) {
    const double rho = std::hypot(k.x(), k.y());
    return Vec3(k.y(), -k.x(), 0.0) / rho;
}

}  // namespace

double polarization_gradient_norm(const Wavevector& k, double step) {
    if (k.norm() == 0.0) throw ZeroWavevector();
    if (step <= 0.0) throw std::invalid_argument("step must be positive");
    const double rho = k.rho();
    if (rho < 10.0 * step) throw SingularAxis("k too close to the x3-axis for finite differencing");

    double frob2 = 0.0;
    for (int j = 0; j < 3; ++j) {
        Vec3 kp = k.k, km = k.k;
        kp[j] += step;
        km[j] -= step;
        const Vec3 column = (eps1_raw(kp) - eps1_raw(km)) / (2.0 * step);
        frob2 += column.squaredNorm();
    }
    return std::sqrt(frob2);
}

}  // namespace photonfield
