#include "photonfield/lattice.hpp"

#include <algorithm>

namespace photonfield {

int ModeLattice::on_axis_count() const {
    int count = 0;
    for (const auto& m : modes)
        if (m.on_axis) ++count;
    return count;
}

ModeLattice build_lattice(double L, int N, std::optional<double> lambda_opt) {
    if (!(L > 0.0)) throw std::invalid_argument("box side must be positive");
    if (N < 1) throw std::invalid_argument("max index must be >= 1");

    ModeLattice lattice;
    lattice.box_side = L;
    lattice.max_index = N;
    lattice.cutoff_lambda = lambda_opt;
    const double scale = 2.0 * M_PI / L;

    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            for (int n3 = -N; n3 <= N; ++n3) {
                if (n1 == 0 && n2 == 0 && n3 == 0) continue;
                const long m = long(n1) * n1 + long(n2) * n2 + long(n3) * n3;
                const double knorm = scale * std::sqrt(double(m));
                if (lambda_opt && knorm > *lambda_opt) continue;
                Mode mode;
                mode.n = Eigen::Vector3i(n1, n2, n3);
                mode.k = scale * Vec3(n1, n2, n3);
                mode.knorm = knorm;
                mode.m = m;
                mode.on_axis = (n1 == 0 && n2 == 0);
                lattice.modes.push_back(mode);
            }
    if (lattice.modes.empty()) throw EmptyLattice();

    std::sort(lattice.modes.begin(), lattice.modes.end(), [](const Mode& a, const Mode& b) {
        if (a.m != b.m) return a.m < b.m;
        return std::lexicographical_compare(a.n.data(), a.n.data() + 3, b.n.data(), b.n.data() + 3);
    });
    return lattice;
}

}  // namespace photonfield
