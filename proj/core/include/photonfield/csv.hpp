#pragma once

#include <ostream>
#include <string>

#include "photonfield/coupling.hpp"
#include "photonfield/spectrum.hpp"
#include "photonfield/thermo.hpp"

namespace photonfield::csv {

// Shortest round-trippable decimal form; identical inputs always format
// identically, which is what makes CLI output byte-reproducible.
std::string format_double(double x);

// Header: r,value,kind,taper,lambda,taper_width
void write_profile(std::ostream& os, const SampledProfile& profile, bool header = true);

// Header: m_composition,energy_over_hc,multiplicity
void write_spectrum(std::ostream& os, const SpectrumMultiset& spectrum, bool header = true);

struct PlanckRow {
    double L;
    double theta;
    int channels;
    double density;
    FreeEnergyMethod method;
    SignConvention sign;
};

// Header: L,theta,channels,density,method,sign_convention
void write_planck_header(std::ostream& os);
void write_planck_row(std::ostream& os, const PlanckRow& row);

}  // namespace photonfield::csv
