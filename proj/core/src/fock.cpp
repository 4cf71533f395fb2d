#include "photonfield/fock.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "photonfield/errors.hpp"

namespace photonfield {

namespace {
constexpr long long kStateGuard = 10'000'000LL;
}

FockRep::FockRep(std::vector<OscillatorSpec> oscillators, int n_max, std::optional<int> total_cap)
    : oscillators_(std::move(oscillators)), n_max_(n_max), total_cap_(total_cap) {
    if (n_max_ < 1) throw std::invalid_argument("n_max must be >= 1");
    if (oscillators_.empty()) throw std::invalid_argument("need at least one oscillator");

    // Enumerate occupation vectors in lexicographic order.
    std::vector<int> occ(oscillators_.size(), 0);
    long long guard = 0;
    while (true) {
        int total = 0;
        for (int n : occ) total += n;
        if (!total_cap_ || total <= *total_cap_) {
            basis_.push_back(occ);
            if (++guard > kStateGuard)
                throw StateSpaceTooLarge("Fock basis exceeds the 1e7 state guard");
        }
        size_t i = occ.size();
        while (i > 0) {
            if (occ[i - 1] < n_max_) {
                ++occ[i - 1];
                break;
            }
            occ[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

int FockRep::index_of(const std::vector<int>& occ) const {
    // Lexicographic rank; reject states outside caps.
    int total = 0;
    for (int n : occ) {
        if (n < 0 || n > n_max_) return -1;
        total += n;
    }
    if (total_cap_ && total > *total_cap_) return -1;
    if (!total_cap_) {
        long long rank = 0;
        for (int n : occ) rank = rank * (n_max_ + 1) + n;
        return static_cast<int>(rank);
    }
    const auto it = std::lower_bound(basis_.begin(), basis_.end(), occ);
    if (it == basis_.end() || *it != occ) return -1;
    return static_cast<int>(it - basis_.begin());
}

SparseD FockRep::lowering(size_t osc) const {
    std::vector<Eigen::Triplet<double>> triplets;
    for (int col = 0; col < dim(); ++col) {
        const auto& occ = basis_[col];
        const int n = occ[osc];
        if (n == 0) continue;
        std::vector<int> lowered = occ;
        --lowered[osc];
        const int row = index_of(lowered);
        if (row >= 0) triplets.emplace_back(row, col, std::sqrt(double(n)));
    }
    SparseD a(dim(), dim());
    a.setFromTriplets(triplets.begin(), triplets.end());
    return a;
}

SparseD FockRep::number_op(size_t osc) const {
    std::vector<Eigen::Triplet<double>> triplets;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i][osc] > 0) triplets.emplace_back(i, i, double(basis_[i][osc]));
    SparseD n(dim(), dim());
    n.setFromTriplets(triplets.begin(), triplets.end());
    return n;
}

SparseD FockRep::field_energy() const {
    std::vector<Eigen::Triplet<double>> triplets;
    for (int i = 0; i < dim(); ++i) {
        double e = 0.0;
        for (size_t osc = 0; osc < oscillators_.size(); ++osc)
            e += oscillators_[osc].weight * basis_[i][osc];
        if (e != 0.0) triplets.emplace_back(i, i, e);
    }
    SparseD h(dim(), dim());
    h.setFromTriplets(triplets.begin(), triplets.end());
    return h;
}

std::vector<bool> FockRep::protected_mask() const {
    std::vector<bool> mask(basis_.size(), true);
    for (size_t i = 0; i < basis_.size(); ++i)
        for (int n : basis_[i])
            if (n >= n_max_) {
                mask[i] = false;
                break;
            }
    return mask;
}

namespace {

double masked_max_abs(const Eigen::MatrixXd& m, const std::vector<bool>& mask) {
    double dev = 0.0;
    for (int c = 0; c < m.cols(); ++c) {
        if (!mask[c]) continue;
        for (int r = 0; r < m.rows(); ++r) {
            if (!mask[r]) continue;
            dev = std::max(dev, std::abs(m(r, c)));
        }
    }
    return dev;
}

}  // namespace

double ccr_frame_check(const Mat3& frame_rows, int n_max) {
    std::vector<OscillatorSpec> oscillators{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
    const FockRep rep(oscillators, n_max);
    const auto mask = rep.protected_mask();

    std::vector<Eigen::MatrixXd> a(3), adag(3);
    for (size_t j = 0; j < 3; ++j) {
        a[j] = Eigen::MatrixXd(rep.lowering(j));
        adag[j] = a[j].transpose();
    }

    std::vector<Eigen::MatrixXd> b(3), bdag(3);
    for (int nu = 0; nu < 3; ++nu) {
        b[nu] = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
        for (int j = 0; j < 3; ++j) b[nu] += frame_rows(nu, j) * a[j];
        bdag[nu] = b[nu].transpose();
    }

    double dev = 0.0;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
    for (int nu = 0; nu < 3; ++nu)
        for (int mu = 0; mu < 3; ++mu) {
            const double delta = (nu == mu) ? 1.0 : 0.0;
            const Eigen::MatrixXd comm1 = b[nu] * bdag[mu] - bdag[mu] * b[nu] - delta * id;
            const Eigen::MatrixXd comm2 = b[nu] * b[mu] - b[mu] * b[nu];
            dev = std::max(dev, masked_max_abs(comm1, mask));
            dev = std::max(dev, masked_max_abs(comm2, mask));
        }
    return dev;
}

double ccr_transform_check(const Wavevector& k, int n_max, const Vec3& axis_fallback) {
    const PolarizationBasis basis = make_polarization_basis(k, axis_fallback);
    Mat3 frame;
    frame.row(0) = basis.eps1;
    frame.row(1) = basis.eps2;
    frame.row(2) = basis.khat;
    return ccr_frame_check(frame, n_max);
}

EvolutionReport heisenberg_scalar_evolution(double omega, double t, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const int dim = n_max + 1;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));

    // U = exp(i H t) is diagonal with phases exp(i omega n t).
    Eigen::VectorXcd phases(dim);
    for (int n = 0; n < dim; ++n)
        phases(n) = std::exp(std::complex<double>(0.0, omega * n * t));
    const Eigen::MatrixXcd evolved = phases.asDiagonal() * a * phases.conjugate().asDiagonal();

    EvolutionReport report;
    double best = std::numeric_limits<double>::infinity();
    for (int sign : {+1, -1}) {
        const std::complex<double> phase = std::exp(std::complex<double>(0.0, sign * omega * t));
        double dev = 0.0;
        for (int row = 0; row < n_max; ++row)      // occupations < n_max on both sides
            for (int col = 0; col < n_max; ++col)
                dev = std::max(dev, std::abs(evolved(row, col) - phase * a(row, col)));
        // The matrix element a(n_max-1, n_max) couples a protected row to the
        // top level; include it so the check is not vacuous at small n_max.
        dev = std::max(dev, std::abs(evolved(n_max - 1, n_max) - phase * a(n_max - 1, n_max)));
        if (dev < best) {
            best = dev;
            report.phase_sign = sign;
        }
    }
    report.deviation = best;
    if (omega * t == 0.0) report.phase_sign = 0;  // both signs degenerate
    return report;
}

bool number_conservation_check(const FockRep& rep, const SparseD& hamiltonian) {
    for (size_t osc = 0; osc < rep.oscillator_count(); ++osc) {
        const SparseD n = rep.number_op(osc);
        SparseD comm = (hamiltonian * n - n * hamiltonian).pruned(0.0, 0.0);
        for (int k = 0; k < comm.outerSize(); ++k)
            for (SparseD::InnerIterator it(comm, k); it; ++it)
                if (it.value() != 0.0) return false;
    }
    return true;
}

}  // namespace photonfield
