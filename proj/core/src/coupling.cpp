#include "photonfield/coupling.hpp"

#include <cmath>

#include "photonfield/quadrature.hpp"

namespace photonfield {

std::string profile_kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::h: return "h";
        case ProfileKind::htilde: return "htilde";
        case ProfileKind::htilde_grad: return "htilde_grad";
        case ProfileKind::h_polarized: return "h_polarized";
    }
    return "?";
}

namespace {

std::vector<double> taper_breaks(const CutoffSpec& spec) {
    if (spec.taper == Taper::sharp) return {};
    return {spec.inner_edge()};
}

}  // namespace

double radial_transform(const CutoffSpec& spec, double alpha, double r) {
    spec.validate();
    if (!(r > 0.0)) throw NonPositiveRadius(r);
    if (!(alpha > 0.0 && alpha < 3.0)) throw UnsupportedAlpha(alpha);
    const auto breaks = taper_breaks(spec);
    const auto amp = [&](double kappa) {
        return cutoff_eval(spec, kappa) * std::pow(kappa, 1.0 - alpha);
    };
    return (2.0 / r) *
           quad::fourier_integral(amp, quad::Trig::sine, r, spec.lambda, breaks);
}

double value_at_origin(const CutoffSpec& spec, double alpha) {
    spec.validate();
    if (!(alpha > 0.0 && alpha < 3.0)) throw UnsupportedAlpha(alpha);
    const auto breaks = taper_breaks(spec);
    const auto amp = [&](double kappa) {
        return cutoff_eval(spec, kappa) * std::pow(kappa, 2.0 - alpha);
    };
    return 2.0 * quad::fourier_integral(amp, quad::Trig::cosine, 0.0, spec.lambda, breaks);
}

double compute_h(const CutoffSpec& spec, double r) { return radial_transform(spec, 0.5, r); }

double compute_htilde(const CutoffSpec& spec, double r) { return radial_transform(spec, 1.5, r); }

double compute_htilde_gradient(const CutoffSpec& spec, double r) {
    spec.validate();
    if (!(r > 0.0)) throw NonPositiveRadius(r);
    const auto breaks = taper_breaks(spec);
    const auto amp = [&](double kappa) {
        return cutoff_eval(spec, kappa) * std::sqrt(kappa);
    };
    const double cosine_part =
        quad::fourier_integral(amp, quad::Trig::cosine, r, spec.lambda, breaks);
    return -compute_htilde(spec, r) / r + (2.0 / r) * cosine_part;
}

namespace {

constexpr double kRadiusCapTimesLambda = 50.0;

// Azimuthal integrals of eps^i_lambda(k) e^(-i a cos(phi - psi)) over phi,
// with a = kappa * rho_y * sin(theta). Everything reduces to J0 and J1.
struct AzimuthalKernel {
    double cos_psi, sin_psi;
    int lambda_index, component;

    std::complex<double> eval(double theta, double a) const {
        using namespace std::complex_literals;
        if (lambda_index == 1) {
            if (component == 3) return 0.0;
            const double j1 = std::cyl_bessel_j(1, a);
            if (component == 1) return -2.0 * M_PI * 1i * sin_psi * j1;
            return 2.0 * M_PI * 1i * cos_psi * j1;  // component == 2
        }
        // lambda_index == 2: eps2 = (cos(theta)cos(phi), cos(theta)sin(phi), -sin(theta))
        if (component == 3) return -2.0 * M_PI * std::sin(theta) * std::cyl_bessel_j(0, a);
        const double j1 = std::cyl_bessel_j(1, a);
        const double c = (component == 1) ? cos_psi : sin_psi;
        return -2.0 * M_PI * 1i * std::cos(theta) * c * j1;
    }
};

}  // namespace

std::complex<double> compute_h_polarized_complex(const CutoffSpec& spec, int lambda_index,
                                                 int component, const Vec3& y) {
    spec.validate();
    if (lambda_index != 1 && lambda_index != 2)
        throw std::invalid_argument("lambda_index must be 1 or 2");
    if (component < 1 || component > 3) throw std::invalid_argument("component must be 1..3");
    const double r = y.norm();
    if (!(r > 0.0)) throw NonPositiveRadius(r);
    if (r > kRadiusCapTimesLambda / spec.lambda)
        throw QuadratureBudgetExceeded(
            0.0, "polarized coupling radius exceeds the 50/Lambda budget cap");

    const double rho_y = std::hypot(y.x(), y.y());
    const double psi = (rho_y > 0.0) ? std::atan2(y.y(), y.x()) : 0.0;
    const AzimuthalKernel kernel{std::cos(psi), std::sin(psi), lambda_index, component};
    if (lambda_index == 1 && component == 3) return 0.0;  // eps1 has no third component

    const double y3 = y.z();
    const quad::GaussRule& rule = quad::gauss_legendre(16);

    // Inner theta integral for fixed kappa; phase scale kappa * |y| bounds the
    // oscillation of both the plane-wave factor and the Bessel kernels.
    const auto theta_integral = [&](double kappa) {
        const int panels = std::max(4, static_cast<int>(std::ceil(kappa * r / M_PI)) + 1);
        std::complex<double> sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double t0 = M_PI * p / panels;
            const double t1 = M_PI * (p + 1) / panels;
            const double mid = 0.5 * (t0 + t1);
            const double half = 0.5 * (t1 - t0);
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                const double theta = mid + half * rule.nodes[i];
                const double st = std::sin(theta);
                const double a = kappa * rho_y * st;
                const double phase = -kappa * y3 * std::cos(theta);
                const std::complex<double> plane(std::cos(phase), std::sin(phase));
                sum += rule.weights[i] * half * st * plane * kernel.eval(theta, a);
            }
        }
        return sum;
    };

    // Outer kappa integral through kappa = u^2; panel edges at half-period
    // multiples of the worst-case phase kappa * |y|.
    const double u_max = std::sqrt(spec.lambda);
    std::vector<double> edges{0.0};
    const double half_period = M_PI / r;
    for (int j = 1; j * half_period < spec.lambda; ++j) edges.push_back(std::sqrt(j * half_period));
    if (spec.taper != Taper::sharp) edges.push_back(std::sqrt(spec.inner_edge()));
    edges.push_back(u_max);
    std::sort(edges.begin(), edges.end());
    if (edges.size() < 6) {
        edges.clear();
        for (int j = 0; j <= 5; ++j) edges.push_back(u_max * j / 5.0);
    }

    std::complex<double> total = 0.0;
    for (size_t e = 0; e + 1 < edges.size(); ++e) {
        const double mid = 0.5 * (edges[e] + edges[e + 1]);
        const double half = 0.5 * (edges[e + 1] - edges[e]);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = mid + half * rule.nodes[i];
            const double kappa = u * u;
            const double chi = cutoff_eval(spec, kappa);
            if (chi == 0.0) continue;
            const double amp = 2.0 * u * chi * kappa * std::sqrt(kappa);  // 2u * kappa^(3/2)
            total += rule.weights[i] * half * amp * theta_integral(kappa);
        }
    }
    return total / (2.0 * M_PI);
}

PolarizedValue compute_h_polarized(const CutoffSpec& spec, int lambda_index, int component,
                                   const Vec3& y) {
    const std::complex<double> full =
        compute_h_polarized_complex(spec, lambda_index, component, y);
    if (lambda_index == 1) return {full.imag(), std::abs(full.real())};
    return {full.real(), std::abs(full.imag())};
}

std::vector<double> geometric_grid(double rmin, double rmax, int points) {
    if (!(rmin > 0.0) || !(rmax > rmin)) throw std::invalid_argument("need 0 < rmin < rmax");
    if (points < 2) throw std::invalid_argument("need at least 2 grid points");
    std::vector<double> grid(points);
    const double lr0 = std::log(rmin), lr1 = std::log(rmax);
    for (int i = 0; i < points; ++i)
        grid[i] = std::exp(lr0 + (lr1 - lr0) * i / (points - 1));
    grid.front() = rmin;
    grid.back() = rmax;
    return grid;
}

std::vector<double> uniform_grid(double rmin, double rmax, int points) {
    if (!(rmax > rmin)) throw std::invalid_argument("need rmin < rmax");
    if (points < 2) throw std::invalid_argument("need at least 2 grid points");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = rmin + (rmax - rmin) * i / (points - 1);
    return grid;
}

SampledProfile sample_profile(const CutoffSpec& spec, ProfileKind kind,
                              const std::vector<double>& radii) {
    SampledProfile profile;
    profile.radii = radii;
    profile.cutoff = spec;
    profile.kind = kind;
    profile.values.reserve(radii.size());
    for (double r : radii) {
        switch (kind) {
            case ProfileKind::h: profile.values.push_back(compute_h(spec, r)); break;
            case ProfileKind::htilde: profile.values.push_back(compute_htilde(spec, r)); break;
            case ProfileKind::htilde_grad:
                profile.values.push_back(compute_htilde_gradient(spec, r));
                break;
            default:
                throw std::invalid_argument("sample_profile: use sample_polarized_ray for h_polarized");
        }
    }
    return profile;
}

SampledProfile sample_polarized_ray(const CutoffSpec& spec, int lambda_index, int component,
                                    const Vec3& direction, const std::vector<double>& radii) {
    const Vec3 dir = direction.normalized();
    SampledProfile profile;
    profile.radii = radii;
    profile.cutoff = spec;
    profile.kind = ProfileKind::h_polarized;
    profile.values.reserve(radii.size());
    for (double r : radii) {
        const PolarizedValue v = compute_h_polarized(spec, lambda_index, component, r * dir);
        profile.values.push_back(std::abs(v.value));
    }
    return profile;
}

}  // namespace photonfield
