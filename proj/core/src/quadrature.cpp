#include "photonfield/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace photonfield::quad {

namespace {

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

double panel(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double composite(const std::function<double(double)>& f, std::span<const double> breaks, int order) {
    double sum = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) sum += panel(f, breaks[i], breaks[i + 1], order);
    return sum;
}

double composite_uniform(const std::function<double(double)>& f, double a, double b, int n, int order) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x0 = a + (b - a) * i / n;
        const double x1 = a + (b - a) * (i + 1) / n;
        sum += panel(f, x0, x1, order);
    }
    return sum;
}

namespace {

constexpr int kOrder = 16;
constexpr int kMinPanelsPerRegion = 4;
constexpr size_t kPanelBudget = 2'000'000;

// Panel edges within [a, b]: half-period multiples of pi/omega, at least
// kMinPanelsPerRegion subdivisions regardless.
std::vector<double> oscillation_edges(double a, double b, double omega) {
    std::vector<double> edges{a};
    if (omega > 0.0) {
        const double half_period = M_PI / omega;
        for (double x = std::ceil(a / half_period + 1e-12) * half_period; x < b - 1e-15 * (b - a);
             x += half_period) {
            if (x > a) edges.push_back(x);
        }
    }
    edges.push_back(b);
    if (edges.size() < kMinPanelsPerRegion + 1) {
        std::vector<double> refined;
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            const int split =
                static_cast<int>(std::ceil(double(kMinPanelsPerRegion) / (edges.size() - 1)));
            for (int j = 0; j < split; ++j)
                refined.push_back(edges[i] + (edges[i + 1] - edges[i]) * j / split);
        }
        refined.push_back(b);
        edges = std::move(refined);
    }
    return edges;
}

}  // namespace

double fourier_integral(const std::function<double(double)>& amp, Trig trig, double omega,
                        double upper, std::span<const double> interior_breaks) {
    if (!(upper > 0.0)) throw std::invalid_argument("fourier_integral: upper must be positive");
    std::vector<double> regions{0.0};
    for (double b : interior_breaks)
        if (b > 0.0 && b < upper) regions.push_back(b);
    regions.push_back(upper);
    std::sort(regions.begin(), regions.end());

    const auto trig_eval = [&](double kappa) {
        return trig == Trig::sine ? std::sin(kappa * omega) : std::cos(kappa * omega);
    };

    if (omega > 0.0 && upper * omega / M_PI > double(kPanelBudget))
        throw QuadratureBudgetExceeded(0.0, "fourier_integral: oscillation panel budget exceeded");

    double total = 0.0;

    // First region through kappa = u^2; phase edges become u_j = sqrt(j*pi/omega).
    {
        const double s0 = regions[1];
        const double u_max = std::sqrt(s0);
        std::vector<double> edges{0.0};
        if (omega > 0.0) {
            const double half_period = M_PI / omega;
            for (int j = 1; j * half_period < s0; ++j) edges.push_back(std::sqrt(j * half_period));
        }
        edges.push_back(u_max);
        if (edges.size() < kMinPanelsPerRegion + 1) {
            edges.clear();
            for (int j = 0; j <= kMinPanelsPerRegion; ++j)
                edges.push_back(u_max * j / kMinPanelsPerRegion);
        }
        const auto integrand = [&](double u) {
            const double kappa = u * u;
            return 2.0 * u * amp(kappa) * trig_eval(kappa);
        };
        total += composite(integrand, edges, kOrder);
    }

    // Remaining regions in the original variable.
    const auto integrand = [&](double kappa) { return amp(kappa) * trig_eval(kappa); };
    for (size_t i = 1; i + 1 < regions.size(); ++i) {
        const auto edges = oscillation_edges(regions[i], regions[i + 1], omega);
        total += composite(integrand, edges, kOrder);
    }
    return total;
}

}  // namespace photonfield::quad
