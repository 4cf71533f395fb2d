#include "photonfield/cutoff.hpp"

#include <cmath>

namespace photonfield {

void CutoffSpec::validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("cutoff radius must be positive");
    if (taper != Taper::sharp && !(taper_width > 0.0 && taper_width < 1.0))
        throw std::invalid_argument("taper_width must lie in (0,1)");
}

namespace {

// exp(-1/t) extended by 0 at t <= 0.
double bump_half(double t) {
    return t > 0.0 ? std::exp(-1.0 / t) : 0.0;
}

}  // namespace

double cutoff_eval(const CutoffSpec& spec, double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("kappa must be nonnegative");
    if (spec.taper == Taper::sharp) return kappa <= spec.lambda ? 1.0 : 0.0;
    const double lo = spec.inner_edge();
    if (kappa <= lo) return 1.0;
    if (kappa >= spec.lambda) return 0.0;
    const double t = (kappa - lo) / (spec.lambda - lo);  // in (0,1)
    switch (spec.taper) {
        case Taper::cosine_taper:
            return 0.5 * (1.0 + std::cos(M_PI * t));
        case Taper::smooth_bump: {
            const double a = bump_half(1.0 - t);
            const double b = bump_half(t);
            return a / (a + b);
        }
        default:
            return 0.0;  // unreachable
    }
}

std::string taper_name(Taper t) {
    switch (t) {
        case Taper::sharp: return "sharp";
        case Taper::cosine_taper: return "cosine_taper";
        case Taper::smooth_bump: return "smooth_bump";
    }
    return "?";
}

Taper taper_from_name(const std::string& name) {
    if (name == "sharp") return Taper::sharp;
    if (name == "cosine_taper") return Taper::cosine_taper;
    if (name == "smooth_bump") return Taper::smooth_bump;
    throw std::invalid_argument("unknown taper family: " + name);
}

}  // namespace photonfield
