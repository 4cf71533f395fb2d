#include "photonfield/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace photonfield {

int channel_count(Channels c) {
    switch (c) {
        case Channels::two: return 2;
        case Channels::three: return 3;
        case Channels::scalar_only: return 1;
    }
    return 0;
}

namespace {

constexpr unsigned long long kStateGuard = 10'000'000ULL;

// m = s^2 * f with f squarefree.
std::pair<long long, long> squarefree_decompose(long m) {
    long long s = 1;
    long f = m;
    for (long d = 2; d * d <= f; ++d) {
        while (f % (d * d) == 0) {
            f /= d * d;
            s *= d;
        }
    }
    return {s, f};
}

}  // namespace

void EnergyKey::add_quanta(long m, long long n) {
    if (n == 0) return;
    const auto [s, f] = squarefree_decompose(m);
    terms[f] += s * n;
    if (terms[f] == 0) terms.erase(f);
}

double EnergyKey::energy(double scale) const {
    double e = 0.0;
    for (const auto& [f, c] : terms) e += double(c) * std::sqrt(double(f));
    return scale * e;
}

std::string EnergyKey::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : terms) {
        if (!first) os << "+";
        os << c << "*sqrt(" << f << ")";
        first = false;
    }
    return os.str();
}

unsigned long long SpectrumMultiset::total_states() const {
    unsigned long long total = 0;
    for (const auto& [key, mult] : by_quanta) total += static_cast<unsigned long long>(mult);
    return total;
}

namespace {

// Number of ordered g-tuples with entries in [0, n_max] summing to t, for all t.
std::vector<long long> group_level_counts(int g, int n_max, int t_limit) {
    std::vector<long long> ways{1};
    for (int osc = 0; osc < g; ++osc) {
        std::vector<long long> next(std::min<size_t>(ways.size() + n_max, t_limit + 1), 0);
        for (size_t t = 0; t < ways.size(); ++t) {
            if (ways[t] == 0) continue;
            for (int n = 0; n <= n_max && t + n < next.size(); ++n) next[t + n] += ways[t];
        }
        ways = std::move(next);
    }
    return ways;
}

void check_state_guard(const std::vector<std::pair<long, int>>& groups, int n_max,
                       std::optional<int> total_cap) {
    // Count admissible occupation assignments, saturating at the guard.
    if (!total_cap) {
        long double states = 1.0L;
        for (const auto& [m, g] : groups) {
            for (int i = 0; i < g; ++i) {
                states *= (n_max + 1);
                if (states > static_cast<long double>(kStateGuard))
                    throw StateSpaceTooLarge("truncated state space exceeds the 1e7 guard");
            }
        }
        return;
    }
    std::vector<long double> dp(*total_cap + 1, 0.0L);
    dp[0] = 1.0L;
    for (const auto& [m, g] : groups)
        for (int i = 0; i < g; ++i) {
            std::vector<long double> next(dp.size(), 0.0L);
            for (size_t q = 0; q < dp.size(); ++q)
                for (int n = 0; n <= n_max && q + n < next.size(); ++n) next[q + n] += dp[q];
            dp = std::move(next);
        }
    long double states = 0.0L;
    for (long double x : dp) states += x;
    if (states > static_cast<long double>(kStateGuard))
        throw StateSpaceTooLarge("truncated state space exceeds the 1e7 guard");
}

}  // namespace

SpectrumMultiset field_spectrum(const ModeLattice& lattice, Channels channels, int n_max,
                                std::optional<int> total_cap) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (total_cap && *total_cap < 0) throw std::invalid_argument("total_cap must be >= 0");

    // Oscillators sharing the same |n|^2 contribute through their total quanta
    // only, so the enumeration runs over per-group occupation totals.
    std::map<long, int> group_sizes;
    for (const auto& mode : lattice.modes) group_sizes[mode.m] += channel_count(channels);
    std::vector<std::pair<long, int>> groups(group_sizes.begin(), group_sizes.end());

    check_state_guard(groups, n_max, total_cap);

    std::map<std::pair<int, EnergyKey>, long long> acc{{{0, EnergyKey{}}, 1}};
    for (const auto& [m, g] : groups) {
        const int t_limit = total_cap ? std::min(*total_cap, g * n_max) : g * n_max;
        const auto ways = group_level_counts(g, n_max, t_limit);
        std::map<std::pair<int, EnergyKey>, long long> next;
        for (const auto& [qk, mult] : acc) {
            const auto& [quanta, key] = qk;
            for (int t = 0; t < static_cast<int>(ways.size()); ++t) {
                if (ways[t] == 0) continue;
                if (total_cap && quanta + t > *total_cap) break;
                EnergyKey nk = key;
                nk.add_quanta(m, t);
                next[{quanta + t, nk}] += mult * ways[t];
            }
        }
        acc = std::move(next);
    }

    SpectrumMultiset result;
    result.scale = lattice.energy_scale();
    result.by_quanta = std::move(acc);
    std::map<EnergyKey, long long> by_key;
    for (const auto& [qk, mult] : result.by_quanta) by_key[qk.second] += mult;
    for (const auto& [key, mult] : by_key)
        result.rows.push_back({key, key.energy(result.scale), mult});
    std::sort(result.rows.begin(), result.rows.end(), [](const auto& a, const auto& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.key < b.key;
    });
    return result;
}

EquivalenceReport spectrum_equivalence_check(const ModeLattice& lattice, int n_max,
                                             std::optional<int> total_cap) {
    const SpectrumMultiset three = field_spectrum(lattice, Channels::three, n_max, total_cap);
    const SpectrumMultiset two = field_spectrum(lattice, Channels::two, n_max, total_cap);
    const SpectrumMultiset scalar =
        field_spectrum(lattice, Channels::scalar_only, n_max, total_cap);

    // Cap-respecting Minkowski sum of the two- and scalar-channel spectra.
    std::map<std::pair<int, EnergyKey>, long long> combined;
    for (const auto& [qk2, c2] : two.by_quanta)
        for (const auto& [qk0, c0] : scalar.by_quanta) {
            const int quanta = qk2.first + qk0.first;
            if (total_cap && quanta > *total_cap) continue;
            EnergyKey key = qk2.second;
            for (const auto& [f, c] : qk0.second.terms) {
                key.terms[f] += c;
                if (key.terms[f] == 0) key.terms.erase(f);
            }
            combined[{quanta, key}] += c2 * c0;
        }

    EquivalenceReport report;
    report.equal = (combined == three.by_quanta);
    if (!report.equal) {
        // First (quanta, key) where the two sides disagree, in sorted order.
        auto lhs = three.by_quanta.begin();
        auto rhs = combined.begin();
        while (lhs != three.by_quanta.end() || rhs != combined.end()) {
            if (rhs == combined.end() ||
                (lhs != three.by_quanta.end() && lhs->first < rhs->first)) {
                report.first_discrepancy = "energy " + lhs->first.second.to_string() +
                                           " (quanta " + std::to_string(lhs->first.first) +
                                           "): three-channel " + std::to_string(lhs->second) +
                                           " vs combined 0";
                break;
            }
            if (lhs == three.by_quanta.end() || rhs->first < lhs->first) {
                report.first_discrepancy = "energy " + rhs->first.second.to_string() +
                                           " (quanta " + std::to_string(rhs->first.first) +
                                           "): three-channel 0 vs combined " +
                                           std::to_string(rhs->second);
                break;
            }
            if (lhs->second != rhs->second) {
                report.first_discrepancy = "energy " + lhs->first.second.to_string() +
                                           " (quanta " + std::to_string(lhs->first.first) +
                                           "): three-channel " + std::to_string(lhs->second) +
                                           " vs combined " + std::to_string(rhs->second);
                break;
            }
            ++lhs;
            ++rhs;
        }
    }
    return report;
}

}  // namespace photonfield
