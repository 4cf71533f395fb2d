#pragma once

#include <Eigen/SparseCore>
#include <complex>
#include <optional>
#include <vector>

#include "photonfield/geometry.hpp"

namespace photonfield {

using SparseD = Eigen::SparseMatrix<double>;

struct OscillatorSpec {
    int mode_id = 0;
    int channel = 0;      // 1..3 for Cartesian, or {1, 2, 0} after the basis change
    double weight = 1.0;  // |k| for this oscillator
};

// Occupation-truncated bosonic representation over a list of oscillators.
// Ladder matrices act on the product occupation basis with per-oscillator
// occupation <= n_max and (optionally) total quanta <= total_cap. Raising is
// the transpose of lowering in this real basis; the commutator defect of the
// truncation is confined to the top occupation level.
class FockRep {
  public:
    FockRep(std::vector<OscillatorSpec> oscillators, int n_max,
            std::optional<int> total_cap = std::nullopt);

    int dim() const { return static_cast<int>(basis_.size()); }
    int n_max() const { return n_max_; }
    size_t oscillator_count() const { return oscillators_.size(); }
    const std::vector<OscillatorSpec>& oscillators() const { return oscillators_; }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    SparseD lowering(size_t osc) const;
    SparseD raising(size_t osc) const { return SparseD(lowering(osc).transpose()); }
    SparseD number_op(size_t osc) const;
    SparseD field_energy() const;  // sum_osc weight * a^dag a, diagonal

    // Basis states with every occupation strictly below n_max; the truncated
    // CCR hold exactly there.
    std::vector<bool> protected_mask() const;

  private:
    std::vector<OscillatorSpec> oscillators_;
    int n_max_;
    std::optional<int> total_cap_;
    std::vector<std::vector<int>> basis_;
    int index_of(const std::vector<int>& occ) const;  // -1 if outside the basis
};

// Max entrywise deviation, on the protected subspace, of [a_nu, a_mu^dag] -
// delta * I and [a_nu, a_mu] for a_nu = sum_j frame(nu, j) a^j. Any orthogonal
// frame must give ~0; a skewed frame is the negative control.
double ccr_frame_check(const Mat3& frame_rows, int n_max);

// Frame rows (eps1, eps2, khat) from the standard polarization basis at k.
double ccr_transform_check(const Wavevector& k, int n_max,
                           const Vec3& axis_fallback = Vec3::UnitX());

struct EvolutionReport {
    double deviation = 0.0;  // max entrywise deviation on the protected block
    int phase_sign = 0;      // empirically matched sign in a(t) = a * exp(i * sign * omega * t)
};

// Heisenberg evolution U(t) a U(t)^dag with U = exp(i H t), H = omega a^dag a,
// by exact diagonal exponentiation on a single truncated oscillator. The
// matched phase sign is reported rather than assumed.
EvolutionReport heisenberg_scalar_evolution(double omega, double t, int n_max);

// True when the Hamiltonian commutes exactly with every per-oscillator number
// operator (sparse arithmetic, no tolerance).
bool number_conservation_check(const FockRep& rep, const SparseD& hamiltonian);

}  // namespace photonfield
