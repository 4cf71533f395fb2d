#pragma once

#include <optional>
#include <vector>

#include "photonfield/geometry.hpp"

namespace photonfield {

// One finite-box momentum mode k = 2 pi n / L.
struct Mode {
    Eigen::Vector3i n;
    Vec3 k;
    double knorm;    // |k| = (2 pi / L) sqrt(m)
    long m;          // |n|^2; exact integer key for the energy
    bool on_axis;    // n1 = n2 = 0: polarization fallback needed here
};

struct ModeLattice {
    double box_side = 0.0;
    int max_index = 0;
    std::optional<double> cutoff_lambda;
    std::vector<Mode> modes;

    int on_axis_count() const;
    double energy_scale() const { return 2.0 * M_PI / box_side; }  // |k| = scale * sqrt(m)
};

// Modes k = 2 pi n / L with n in Z^3, 0 < |n|_inf <= N, optionally dropping
// |k| > Lambda; sorted by |k| then lexicographically in n.
ModeLattice build_lattice(double L, int N, std::optional<double> lambda_opt = std::nullopt);

}  // namespace photonfield
