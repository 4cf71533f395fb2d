#include "photonfield/decay_fit.hpp"

#include <cmath>
#include <vector>

namespace photonfield {

namespace {

struct LogPoint {
    double lr;  // log r
    double lv;  // log |value|
};

DecayFit regress(const std::vector<LogPoint>& pts, std::pair<double, double> window,
                 bool envelope) {
    const double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : pts) {
        sx += p.lr;
        sy += p.lv;
        sxx += p.lr * p.lr;
        sxy += p.lr * p.lv;
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (const auto& p : pts) {
        const double resid = p.lv - (slope * p.lr + intercept);
        ss += resid * resid;
    }
    DecayFit fit;
    fit.exponent = slope;
    fit.amplitude = std::exp(intercept);
    fit.r_window = window;
    fit.residual = std::sqrt(ss / n);
    fit.envelope_used = envelope;
    return fit;
}

}  // namespace

DecayFit fit_decay_exponent(const SampledProfile& profile, std::pair<double, double> r_window,
                            bool envelope) {
    const auto [rlo, rhi] = r_window;
    std::vector<size_t> idx;
    for (size_t i = 0; i < profile.radii.size(); ++i)
        if (profile.radii[i] >= rlo && profile.radii[i] <= rhi) idx.push_back(i);
    if (idx.size() < 20)
        throw InsufficientSamples("decay fit needs at least 20 samples in the window, got " +
                                  std::to_string(idx.size()));

    std::vector<LogPoint> pts;
    if (!envelope) {
        for (size_t i : idx) {
            const double av = std::abs(profile.values[i]);
            if (av <= 0.0)
                throw NonPositiveValues("zero sample at r = " + std::to_string(profile.radii[i]) +
                                        "; use envelope mode for oscillatory profiles");
            pts.push_back({std::log(profile.radii[i]), std::log(av)});
        }
    } else {
        // Local maxima of |value|, refined by a parabola in log-log space.
        for (size_t j = 1; j + 1 < idx.size(); ++j) {
            const double vm = std::abs(profile.values[idx[j - 1]]);
            const double v0 = std::abs(profile.values[idx[j]]);
            const double vp = std::abs(profile.values[idx[j + 1]]);
            if (!(v0 > vm && v0 >= vp) || v0 <= 0.0 || vm <= 0.0 || vp <= 0.0) continue;
            const double x0 = std::log(profile.radii[idx[j - 1]]);
            const double x1 = std::log(profile.radii[idx[j]]);
            const double x2 = std::log(profile.radii[idx[j + 1]]);
            const double y0 = std::log(vm), y1 = std::log(v0), y2 = std::log(vp);
            // Vertex of the interpolating parabola; fall back to the raw peak
            // if curvature degenerates.
            const double d1 = (y1 - y0) / (x1 - x0);
            const double d2 = (y2 - y1) / (x2 - x1);
            const double curv = (d2 - d1) / (x2 - x0);
            double xv = x1, yv = y1;
            if (curv < 0.0) {
                xv = 0.5 * (x0 + x1) - d1 / (2.0 * curv);
                if (xv > x0 && xv < x2) {
                    yv = y0 + d1 * (xv - x0) + curv * (xv - x0) * (xv - x1);
                } else {
                    xv = x1;
                    yv = y1;
                }
            }
            pts.push_back({xv, yv});
        }
        if (pts.size() < 30)
            throw InsufficientSamples("envelope fit needs at least 30 peaks in the window, got " +
                                      std::to_string(pts.size()));
    }
    return regress(pts, r_window, envelope);
}

int count_sign_changes(const SampledProfile& profile) {
    int changes = 0;
    double prev = 0.0;
    for (double v : profile.values) {
        if (v == 0.0) continue;
        if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
        prev = v;
    }
    return changes;
}

double weighted_tail_diagnostic(const SampledProfile& profile, double gamma) {
    const auto& r = profile.radii;
    const auto& v = profile.values;
    if (r.size() < 20) throw InsufficientSamples("tail diagnostic needs at least 20 samples");

    const auto integrand = [&](size_t i) {
        return std::pow(r[i], 2.0 * gamma) * v[i] * v[i] * r[i] * r[i];
    };

    // Trapezoidal contributions per dyadic block [r0 * 2^j, r0 * 2^(j+1)).
    std::vector<double> blocks;
    const double r0 = r.front();
    int current = 0;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < r.size(); ++i) {
        const int block = static_cast<int>(std::floor(std::log2(r[i] / r0)));
        if (block > current) {
            blocks.push_back(acc);
            acc = 0.0;
            current = block;
        }
        acc += 0.5 * (integrand(i) + integrand(i + 1)) * (r[i + 1] - r[i]);
    }
    blocks.push_back(acc);
    if (blocks.size() < 3)
        throw InsufficientSamples("tail diagnostic needs at least two complete dyadic blocks");
    // Last block may be partial; use the last two complete ones.
    const double prev = blocks[blocks.size() - 3];
    const double last = blocks[blocks.size() - 2];
    if (prev == 0.0) throw NonPositiveValues("empty dyadic block in tail diagnostic");
    return last / prev;
}

}  // namespace photonfield
