#pragma once

#include <map>
#include <optional>
#include <string>

#include "photonfield/lattice.hpp"

namespace photonfield {

enum class Channels { two, three, scalar_only };

int channel_count(Channels c);

// Exact representation of a finite-box energy sum_osc sqrt(m_osc) * n_osc in
// units of (2 pi / L): coefficients on sqrt(f) for squarefree f, which are
// linearly independent over the rationals, so equal keys mean equal energies
// with zero tolerance.
struct EnergyKey {
    std::map<long, long long> terms;  // squarefree f -> integer coefficient

    void add_quanta(long m, long long n);  // adds n * sqrt(m), decomposed as s*sqrt(f)
    double energy(double scale) const;
    std::string to_string() const;  // e.g. "2*sqrt(1)+1*sqrt(2)"; "0" for vacuum
    auto operator<=>(const EnergyKey&) const = default;
};

// Energy multiset of the diagonal field Hamiltonian over truncated occupation
// assignments. Rows are keyed exactly; the internal quanta-resolved map is
// kept for cap-respecting Minkowski sums.
struct SpectrumMultiset {
    struct Row {
        EnergyKey key;
        double energy;  // in units hbar c (includes the 2 pi / L scale)
        long long multiplicity;
    };
    std::vector<Row> rows;
    double scale = 1.0;
    // (total quanta, energy key) -> multiplicity; exact content.
    std::map<std::pair<int, EnergyKey>, long long> by_quanta;

    unsigned long long total_states() const;
};

// Enumerates sum_osc |k| n_osc over all admissible occupations (per-oscillator
// n <= n_max, total <= total_cap when set). H_f is diagonal by construction;
// no floating-point eigensolve is involved. Guarded at 1e7 states.
SpectrumMultiset field_spectrum(const ModeLattice& lattice, Channels channels, int n_max,
                                std::optional<int> total_cap);

struct EquivalenceReport {
    bool equal = false;
    std::string first_discrepancy;  // empty when equal
};

// Exact multiset check spectrum(three) == spectrum(two) (+) spectrum(scalar),
// where (+) is the Minkowski sum restricted to the same total-quanta cap.
EquivalenceReport spectrum_equivalence_check(const ModeLattice& lattice, int n_max,
                                             std::optional<int> total_cap);

}  // namespace photonfield
