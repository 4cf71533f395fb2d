#pragma once

#include <string>

#include "photonfield/errors.hpp"

namespace photonfield {

enum class Taper {
    sharp,         // indicator of [0, Lambda]
    cosine_taper,  // C^1 raised-cosine transition
    smooth_bump,   // C^infinity bump transition
};

// Ultraviolet cutoff profile chi_Lambda(kappa): identically 1 on the inner
// plateau [0, Lambda*(1-taper_width)], identically 0 beyond Lambda, monotone
// nonincreasing in between. taper_width is a fraction of Lambda and is
// ignored for the sharp taper.
struct CutoffSpec {
    double lambda = 1.0;
    Taper taper = Taper::smooth_bump;
    double taper_width = 0.5;

    // Start of the taper transition (== lambda for the sharp cutoff).
    double inner_edge() const {
        return taper == Taper::sharp ? lambda : lambda * (1.0 - taper_width);
    }
    void validate() const;
};

double cutoff_eval(const CutoffSpec& spec, double kappa);

std::string taper_name(Taper t);
Taper taper_from_name(const std::string& name);

}  // namespace photonfield
