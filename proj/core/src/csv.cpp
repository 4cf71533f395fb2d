#include "photonfield/csv.hpp"

#include <cmath>
#include <cstdio>

namespace photonfield::csv {

std::string format_double(double x) {
    char buf[40];
    // Integers print as integers ("20", not "2e+01").
    if (x == static_cast<long long>(x) && std::abs(x) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
        double parsed;
        std::sscanf(shorter, "%lf", &parsed);
        if (parsed == x) return shorter;
    }
    return buf;
}

void write_profile(std::ostream& os, const SampledProfile& profile, bool header) {
    if (header) os << "r,value,kind,taper,lambda,taper_width\n";
    const std::string kind = profile_kind_name(profile.kind);
    const std::string taper = taper_name(profile.cutoff.taper);
    const std::string lambda = format_double(profile.cutoff.lambda);
    const std::string width =
        profile.cutoff.taper == Taper::sharp ? "0" : format_double(profile.cutoff.taper_width);
    for (size_t i = 0; i < profile.radii.size(); ++i)
        os << format_double(profile.radii[i]) << ',' << format_double(profile.values[i]) << ','
           << kind << ',' << taper << ',' << lambda << ',' << width << '\n';
}

void write_spectrum(std::ostream& os, const SpectrumMultiset& spectrum, bool header) {
    if (header) os << "m_composition,energy_over_hc,multiplicity\n";
    for (const auto& row : spectrum.rows)
        os << row.key.to_string() << ',' << format_double(row.energy) << ',' << row.multiplicity
           << '\n';
}

void write_planck_header(std::ostream& os) {
    os << "L,theta,channels,density,method,sign_convention\n";
}

void write_planck_row(std::ostream& os, const PlanckRow& row) {
    os << format_double(row.L) << ',' << format_double(row.theta) << ',' << row.channels << ','
       << format_double(row.density) << ',' << method_name(row.method) << ','
       << sign_name(row.sign) << '\n';
}

}  // namespace photonfield::csv
