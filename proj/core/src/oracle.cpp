#include "photonfield/oracle.hpp"

#include <cmath>

#include "photonfield/quadrature.hpp"

namespace photonfield {

namespace {

// One tensor-product evaluation in spherical coordinates: kappa through
// kappa = u^2 with m_r Gauss panels, theta with m_t Gauss panels, phi by the
// trapezoidal rule (periodic, hence spectrally accurate).
std::complex<double> tensor_eval(const CutoffSpec& spec, OracleIntegrand id, const Vec3& y,
                                 int lambda_index, int component, int m_r, int m_t, int n_phi) {
    const quad::GaussRule& rule = quad::gauss_legendre(16);
    const double exponent = (id == OracleIntegrand::inv_three_half) ? -1.5 : -0.5;
    const double u_max = std::sqrt(spec.lambda);

    std::vector<double> u_edges;
    for (int j = 0; j <= m_r; ++j) u_edges.push_back(u_max * j / m_r);
    if (spec.taper != Taper::sharp) u_edges.push_back(std::sqrt(spec.inner_edge()));
    std::sort(u_edges.begin(), u_edges.end());

    std::complex<double> total = 0.0;
    for (size_t e = 0; e + 1 < u_edges.size(); ++e) {
        const double umid = 0.5 * (u_edges[e] + u_edges[e + 1]);
        const double uhalf = 0.5 * (u_edges[e + 1] - u_edges[e]);
        for (size_t iu = 0; iu < rule.nodes.size(); ++iu) {
            const double u = umid + uhalf * rule.nodes[iu];
            const double kappa = u * u;
            const double chi = cutoff_eval(spec, kappa);
            if (chi == 0.0) continue;
            // dk = kappa^2 sin(theta) dkappa dtheta dphi, dkappa = 2u du
            const double radial_w =
                rule.weights[iu] * uhalf * 2.0 * u * chi * std::pow(kappa, 2.0 + exponent);

            std::complex<double> theta_sum = 0.0;
            for (int pt = 0; pt < m_t; ++pt) {
                const double t0 = M_PI * pt / m_t;
                const double t1 = M_PI * (pt + 1) / m_t;
                const double tmid = 0.5 * (t0 + t1);
                const double thalf = 0.5 * (t1 - t0);
                for (size_t it = 0; it < rule.nodes.size(); ++it) {
                    const double theta = tmid + thalf * rule.nodes[it];
                    const double st = std::sin(theta);
                    const double ct = std::cos(theta);

                    std::complex<double> phi_sum = 0.0;
                    for (int ip = 0; ip < n_phi; ++ip) {
                        const double phi = 2.0 * M_PI * ip / n_phi;
                        const Vec3 khat(st * std::cos(phi), st * std::sin(phi), ct);
                        double weight = 1.0;
                        if (id == OracleIntegrand::polarized) {
                            if (lambda_index == 1) {
                                const double eps1[3] = {std::sin(phi), -std::cos(phi), 0.0};
                                weight = eps1[component - 1];
                            } else {
                                const double eps2[3] = {ct * std::cos(phi), ct * std::sin(phi), -st};
                                weight = eps2[component - 1];
                            }
                        }
                        const double phase = -kappa * khat.dot(y);
                        phi_sum += weight * std::complex<double>(std::cos(phase), std::sin(phase));
                    }
                    phi_sum *= 2.0 * M_PI / n_phi;
                    theta_sum += rule.weights[it] * thalf * st * phi_sum;
                }
            }
            total += radial_w * theta_sum;
        }
    }
    return total / (2.0 * M_PI);
}

}  // namespace

std::complex<double> oracle_direct_3d_complex(const CutoffSpec& spec, OracleIntegrand id,
                                              const Vec3& y, double abs_tol, int lambda_index,
                                              int component) {
    spec.validate();
    if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
    const double r = y.norm();
    if (r > 50.0 / spec.lambda)
        throw QuadratureBudgetExceeded(0.0, "oracle budget guard: |y| exceeds 50/Lambda");

    // Resolution floor scales with the phase range kappa*|y| <= Lambda*|y|.
    const int base = std::max(2, static_cast<int>(std::ceil(spec.lambda * r / 8.0)) + 1);
    int m_r = base, m_t = base, n_phi = 16 * base;
    std::complex<double> prev = tensor_eval(spec, id, y, lambda_index, component, m_r, m_t, n_phi);
    double err = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 5; ++level) {
        m_r *= 2;
        m_t *= 2;
        n_phi *= 2;
        const std::complex<double> cur =
            tensor_eval(spec, id, y, lambda_index, component, m_r, m_t, n_phi);
        err = std::abs(cur - prev);
        prev = cur;
        if (err < 0.5 * abs_tol) return cur;
        if (static_cast<long long>(m_r) * m_t * n_phi * 256 > 600'000'000LL) break;
    }
    throw QuadratureBudgetExceeded(err, "oracle refinement did not reach the requested tolerance");
}

double oracle_direct_3d(const CutoffSpec& spec, OracleIntegrand id, const Vec3& y, double abs_tol,
                        int lambda_index, int component) {
    const std::complex<double> full =
        oracle_direct_3d_complex(spec, id, y, abs_tol, lambda_index, component);
    if (id == OracleIntegrand::polarized && lambda_index == 1) return full.imag();
    return full.real();
}

}  // namespace photonfield
