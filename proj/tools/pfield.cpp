// pfield: experiment driver for the photonfield library.
//
// Subcommands: couplings, decayfit, anisotropy, fock, planck.
// Exit codes: 0 success, 2 configuration error, 3 quadrature budget exceeded,
//             4 decay-exponent band violation, 5 equivalence-check failure.
//
// Every option can also be supplied through a `key = value` config file
// (--config FILE) or an environment variable PFIELD_<KEY>. Precedence:
// command-line flag > config file > environment variable > built-in default.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "photonfield/coupling.hpp"
#include "photonfield/csv.hpp"
#include "photonfield/decay_fit.hpp"
#include "photonfield/fock.hpp"
#include "photonfield/spectrum.hpp"
#include "photonfield/thermo.hpp"

namespace pf = photonfield;
using pf::csv::format_double;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBand = 4;
constexpr int kExitEquivalence = 5;

std::string env_name(std::string key) {
    for (char& c : key) c = (c == '-') ? '_' : static_cast<char>(std::toupper(c));
    return "PFIELD_" + key;
}

// Attaches the PFIELD_ environment fallback and last-wins semantics to every
// value option of an app; last-wins is what lets config-file injections be
// overridden by flags appearing later on the (augmented) command line.
void finalize_options(CLI::App* app) {
    for (CLI::Option* opt : app->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "config") continue;
        opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        if (opt->get_expected_min() > 0) opt->envname(env_name(name));
    }
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Rewrites `args` (subcommand-first argv tail) so that `key = value` lines
// from the config file become flags inserted directly after the subcommand
// name. Later, real command-line flags win via the TakeLast policy.
int inject_config_file(CLI::App* sub, std::vector<std::string>& args) {
    std::string path;
    for (size_t i = 1; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
    }
    if (path.empty()) return kExitOk;

    std::ifstream in(path);
    if (!in) {
        std::cerr << "config error: cannot open config file '" << path << "'\n";
        return kExitConfig;
    }
    std::vector<std::string> injected;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::cerr << "config error: " << path << ":" << lineno
                      << ": expected 'key = value'\n";
            return kExitConfig;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config" || !sub->get_option_no_throw("--" + key)) {
            std::cerr << "config error: unknown key '" << key << "' in " << path << "\n";
            return kExitConfig;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    args.insert(args.begin() + 1, injected.begin(), injected.end());
    return kExitOk;
}

bool parse_direction(const std::string& text, pf::Vec3& out) {
    double x = 0, y = 0, z = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &x, &y, &z, &extra) != 3) return false;
    out = pf::Vec3(x, y, z);
    return out.norm() > 0.0;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// ---------------------------------------------------------------------------

struct CouplingsOpts {
    std::string taper = "smooth_bump";
    double lambda = 0.0;
    double taper_width = 0.5;
    double rmin = 0.1, rmax = 500.0;
    int points = 200;
    std::string out = ".";
};

int cmd_couplings(const CouplingsOpts& o) {
    const pf::CutoffSpec spec{o.lambda, pf::taper_from_name(o.taper), o.taper_width};
    spec.validate();
    const auto grid = pf::geometric_grid(o.rmin, o.rmax, o.points);
    std::filesystem::create_directories(o.out);

    for (auto kind :
         {pf::ProfileKind::h, pf::ProfileKind::htilde, pf::ProfileKind::htilde_grad}) {
        const auto profile = pf::sample_profile(spec, kind, grid);
        std::ostringstream csv;
        pf::csv::write_profile(csv, profile);
        const std::string name = pf::profile_kind_name(kind);
        write_file(std::filesystem::path(o.out) / (name + ".csv"), csv.str());

        const auto [lo, hi] =
            std::minmax_element(profile.values.begin(), profile.values.end());
        const int changes = pf::count_sign_changes(profile);
        std::cout << "kind=" << name << " rows=" << profile.radii.size()
                  << " min=" << format_double(*lo) << " max=" << format_double(*hi)
                  << " sign_changes=" << changes
                  << " oscillatory=" << (changes > 0 ? "true" : "false") << "\n";
    }
    return kExitOk;
}

struct DecayfitOpts {
    std::string taper = "smooth_bump";
    std::string kind = "h";
    double lambda = 1.0;
    double taper_width = 0.5;
    double rmin = 50.0, rmax = 500.0;
    int points = 0;  // 0: pick a sensible default for the fit mode
    bool envelope = false;
    std::vector<double> band;  // [lo, hi]; empty: per-kind default
    std::string out;
};

std::pair<double, double> default_band(const std::string& kind, bool envelope) {
    if (kind == "htilde") return {-1.55, -1.45};
    if (kind == "htilde_grad") return {-2.6, -2.4};
    return envelope ? std::make_pair(-2.1, -1.9) : std::make_pair(-2.55, -2.45);
}

int cmd_decayfit(const DecayfitOpts& o) {
    const pf::CutoffSpec spec{o.lambda, pf::taper_from_name(o.taper), o.taper_width};
    spec.validate();
    pf::ProfileKind kind;
    if (o.kind == "h") kind = pf::ProfileKind::h;
    else if (o.kind == "htilde") kind = pf::ProfileKind::htilde;
    else if (o.kind == "htilde_grad") kind = pf::ProfileKind::htilde_grad;
    else throw std::invalid_argument("unknown profile kind '" + o.kind + "'");

    // Envelope fits need dense uniform sampling to resolve every oscillation
    // peak; plain fits are cheapest on a geometric grid.
    const int points = o.points > 0 ? o.points : (o.envelope ? 4000 : 200);
    const auto grid = o.envelope ? pf::uniform_grid(o.rmin, o.rmax, points)
                                 : pf::geometric_grid(o.rmin, o.rmax, points);
    const auto profile = pf::sample_profile(spec, kind, grid);
    const auto fit = pf::fit_decay_exponent(profile, {o.rmin, o.rmax}, o.envelope);

    auto [band_lo, band_hi] = default_band(o.kind, o.envelope);
    if (o.band.size() == 2) std::tie(band_lo, band_hi) = std::tie(o.band[0], o.band[1]);
    const bool in_band = fit.exponent >= band_lo && fit.exponent <= band_hi;

    nlohmann::ordered_json record{
        {"kind", o.kind},
        {"taper", o.taper},
        {"exponent", fit.exponent},
        {"amplitude", fit.amplitude},
        {"residual", fit.residual},
        {"envelope", fit.envelope_used},
        {"r_window", {fit.r_window.first, fit.r_window.second}},
        {"band", {band_lo, band_hi}},
        {"in_band", in_band},
    };
    std::cout << record.dump() << "\n";

    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        std::ostringstream csv;
        pf::csv::write_profile(csv, profile);
        write_file(std::filesystem::path(o.out) / (o.kind + ".csv"), csv.str());
    }
    return in_band ? kExitOk : kExitBand;
}

struct AnisotropyOpts {
    std::string taper = "smooth_bump";
    double lambda = 1.0;
    double taper_width = 0.5;
    int lambda_index = 2;
    int component = 3;
    std::string dir1 = "0,1,1";
    std::string dir2 = "1,1,1";
    double r = 20.0;
    double gamma = 0.9;
    double rmin = 1.0, rmax = 45.0;
    int points = 120;
    std::string out;
};

int cmd_anisotropy(const AnisotropyOpts& o) {
    const pf::CutoffSpec spec{o.lambda, pf::taper_from_name(o.taper), o.taper_width};
    spec.validate();
    pf::Vec3 d1, d2;
    if (!parse_direction(o.dir1, d1) || !parse_direction(o.dir2, d2))
        throw std::invalid_argument("directions must be nonzero 'x,y,z' triples");
    d1.normalize();
    d2.normalize();

    const auto v1 = pf::compute_h_polarized(spec, o.lambda_index, o.component, o.r * d1);
    const auto v2 = pf::compute_h_polarized(spec, o.lambda_index, o.component, o.r * d2);
    const double scale = std::max(std::abs(v1.value), std::abs(v2.value));
    const double rel = scale > 0.0 ? std::abs(v1.value - v2.value) / scale : 0.0;
    std::cout << "lambda_index=" << o.lambda_index << " component=" << o.component
              << " r=" << format_double(o.r) << "\n";
    std::cout << "value_dir1=" << format_double(v1.value)
              << " value_dir2=" << format_double(v2.value)
              << " residual_max=" << format_double(std::max(v1.residual, v2.residual))
              << "\n";
    std::cout << "relative_difference=" << format_double(rel) << "\n";

    const auto grid = pf::geometric_grid(o.rmin, o.rmax, o.points);
    const auto ray = pf::sample_polarized_ray(spec, o.lambda_index, o.component, d1, grid);
    const double ratio = pf::weighted_tail_diagnostic(ray, o.gamma);
    std::cout << "gamma=" << format_double(o.gamma)
              << " tail_ratio=" << format_double(ratio)
              << " converging=" << (ratio < 1.0 ? "true" : "false") << "\n";

    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        std::ostringstream csv;
        pf::csv::write_profile(csv, ray);
        write_file(std::filesystem::path(o.out) / "ray.csv", csv.str());
    }
    return kExitOk;
}

struct FockOpts {
    double L = 2.0 * M_PI;
    int N = 1;
    int cap = 3;
    int nmax = 3;
    double cutoff = 0.0;  // 0: no cutoff filter
    std::string out;
};

int cmd_fock(const FockOpts& o) {
    const auto lattice = pf::build_lattice(
        o.L, o.N, o.cutoff > 0.0 ? std::optional<double>(o.cutoff) : std::nullopt);
    std::cout << "modes=" << lattice.modes.size() << " on_axis=" << lattice.on_axis_count()
              << "\n";
    bool all_pass = true;

    const auto report = pf::spectrum_equivalence_check(lattice, o.nmax, o.cap);
    std::cout << "CHECK spectrum_equivalence " << (report.equal ? "PASS" : "FAIL") << "\n";
    if (!report.equal) {
        std::cout << "first_discrepancy: " << report.first_discrepancy << "\n";
        all_pass = false;
    }

    double ccr_max = 0.0;
    for (const auto& mode : lattice.modes)
        ccr_max = std::max(ccr_max, pf::ccr_transform_check(pf::Wavevector{mode.k}, o.nmax));
    const bool ccr_ok = ccr_max < 1e-12;
    std::cout << "CHECK ccr_basis_change " << (ccr_ok ? "PASS" : "FAIL")
              << " max_deviation=" << format_double(ccr_max) << "\n";
    all_pass = all_pass && ccr_ok;

    const double omega = lattice.modes.front().knorm;
    double evo_max = 0.0;
    int sign = 0;
    for (double t : {0.1, 1.0, M_PI, 10.0}) {
        const auto evo = pf::heisenberg_scalar_evolution(omega, t, 6);
        evo_max = std::max(evo_max, evo.deviation);
        if (evo.phase_sign != 0) sign = evo.phase_sign;
    }
    const bool evo_ok = evo_max < 1e-12;
    std::cout << "CHECK scalar_evolution " << (evo_ok ? "PASS" : "FAIL")
              << " max_deviation=" << format_double(evo_max) << " phase_sign=" << sign
              << "\n";
    all_pass = all_pass && evo_ok;

    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        const auto spectrum =
            pf::field_spectrum(lattice, pf::Channels::three, o.nmax, o.cap);
        std::ostringstream csv;
        pf::csv::write_spectrum(csv, spectrum);
        write_file(std::filesystem::path(o.out) / "spectrum_three.csv", csv.str());
    }
    return all_pass ? kExitOk : kExitEquivalence;
}

struct PlanckOpts {
    double theta = 1.0;
    double L = 50.0;
    std::string out;
};

int cmd_planck(const PlanckOpts& o) {
    const pf::ThermalParams params{o.theta, o.L * o.L * o.L};
    params.validate();
    bool all_pass = true;

    const double d_integral = pf::planck_integral_density(o.theta);
    const double expected = -M_PI * M_PI / 90.0 * o.theta * o.theta * o.theta;
    const bool int_ok = std::abs(d_integral - expected) < 1e-8 * std::abs(expected);
    std::cout << "CHECK integral_density " << (int_ok ? "PASS" : "FAIL")
              << " value=" << format_double(d_integral)
              << " expected=" << format_double(expected) << "\n";
    all_pass = all_pass && int_ok;

    const double d_box = pf::finite_box_density(o.L, o.theta);
    const double rel = std::abs(d_box - d_integral) / std::abs(d_integral);
    const bool box_ok = rel < 0.01;
    std::cout << "CHECK box_vs_integral " << (box_ok ? "PASS" : "FAIL")
              << " rel_err=" << format_double(rel) << "\n";
    all_pass = all_pass && box_ok;

    const double sub = pf::subtraction_identity_check(o.L, o.theta);
    const bool sub_ok = sub < 1e-12;
    std::cout << "CHECK channel_subtraction " << (sub_ok ? "PASS" : "FAIL")
              << " rel_err=" << format_double(sub) << "\n";
    all_pass = all_pass && sub_ok;

    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        std::ostringstream csv;
        pf::csv::write_planck_header(csv);
        for (auto method : {pf::FreeEnergyMethod::integral, pf::FreeEnergyMethod::mode_sum})
            for (int channels : {1, 2, 3}) {
                const auto res = pf::assemble_free_energy(params, channels, method,
                                                          pf::SignConvention::standard);
                pf::csv::write_planck_row(
                    csv, {o.L, o.theta, channels, res.per_mode_density, method, res.sign});
            }
        write_file(std::filesystem::path(o.out) / "planck.csv", csv.str());
    }
    return all_pass ? kExitOk : kExitEquivalence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"photon-field numerics driver"};
    app.require_subcommand(1);
    std::string config_path;  // consumed before parsing; registered for --help only

    CouplingsOpts co;
    auto* couplings = app.add_subcommand("couplings", "sample coupling-function profiles");
    couplings->add_option("--taper", co.taper)->check(CLI::IsMember({"sharp", "cosine_taper", "smooth_bump"}));
    couplings->add_option("--lambda", co.lambda, "ultraviolet cutoff")->required();
    couplings->add_option("--taper-width", co.taper_width);
    couplings->add_option("--rmin", co.rmin);
    couplings->add_option("--rmax", co.rmax);
    couplings->add_option("--points", co.points);
    couplings->add_option("--out", co.out, "output directory for CSVs");
    couplings->add_option("--config", config_path, "key = value config file");

    DecayfitOpts dfo;
    auto* decayfit = app.add_subcommand("decayfit", "fit tail decay exponents");
    decayfit->add_option("--taper", dfo.taper)->check(CLI::IsMember({"sharp", "cosine_taper", "smooth_bump"}));
    decayfit->add_option("--kind", dfo.kind)->check(CLI::IsMember({"h", "htilde", "htilde_grad"}));
    decayfit->add_option("--lambda", dfo.lambda);
    decayfit->add_option("--taper-width", dfo.taper_width);
    decayfit->add_option("--rmin", dfo.rmin);
    decayfit->add_option("--rmax", dfo.rmax);
    decayfit->add_option("--points", dfo.points);
    decayfit->add_flag("--envelope", dfo.envelope, "fit the oscillation envelope");
    decayfit->add_option("--band", dfo.band, "assertion band lo hi")->expected(2);
    decayfit->add_option("--out", dfo.out);
    decayfit->add_option("--config", config_path, "key = value config file");

    AnisotropyOpts ao;
    auto* anisotropy = app.add_subcommand("anisotropy", "polarized couplings along rays");
    anisotropy->add_option("--taper", ao.taper)->check(CLI::IsMember({"sharp", "cosine_taper", "smooth_bump"}));
    anisotropy->add_option("--lambda", ao.lambda);
    anisotropy->add_option("--taper-width", ao.taper_width);
    anisotropy->add_option("--lambda-index", ao.lambda_index)->check(CLI::Range(1, 2));
    anisotropy->add_option("--component", ao.component)->check(CLI::Range(1, 3));
    anisotropy->add_option("--dir1", ao.dir1, "first direction x,y,z");
    anisotropy->add_option("--dir2", ao.dir2, "second direction x,y,z");
    anisotropy->add_option("--r", ao.r);
    anisotropy->add_option("--gamma", ao.gamma);
    anisotropy->add_option("--rmin", ao.rmin);
    anisotropy->add_option("--rmax", ao.rmax);
    anisotropy->add_option("--points", ao.points);
    anisotropy->add_option("--out", ao.out);
    anisotropy->add_option("--config", config_path, "key = value config file");

    FockOpts fo;
    auto* fock = app.add_subcommand("fock", "truncated Fock-space checks");
    fock->add_option("--L", fo.L, "box side");
    fock->add_option("--N", fo.N, "lattice index bound");
    fock->add_option("--cap", fo.cap, "total quanta cap");
    fock->add_option("--nmax", fo.nmax, "per-oscillator occupation cap");
    fock->add_option("--cutoff", fo.cutoff, "drop modes with |k| above this");
    fock->add_option("--out", fo.out);
    fock->add_option("--config", config_path, "key = value config file");

    PlanckOpts po;
    auto* planck = app.add_subcommand("planck", "Planck free-energy checks");
    planck->add_option("--theta", po.theta, "dimensionless temperature");
    planck->add_option("--L", po.L, "box side");
    planck->add_option("--out", po.out);
    planck->add_option("--config", config_path, "key = value config file");

    for (auto* sub : {couplings, decayfit, anisotropy, fock, planck}) finalize_options(sub);

    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
        if (CLI::App* sub = app.get_subcommand_no_throw(args[0])) {
            const int rc = inject_config_file(sub, args);
            if (rc != kExitOk) return rc;
        }
    }

    try {
        // CLI11 wants reversed arguments for its vector-parse entry point.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (couplings->parsed()) return cmd_couplings(co);
        if (decayfit->parsed()) return cmd_decayfit(dfo);
        if (anisotropy->parsed()) return cmd_anisotropy(ao);
        if (fock->parsed()) return cmd_fock(fo);
        if (planck->parsed()) return cmd_planck(po);
    } catch (const pf::QuadratureBudgetExceeded& e) {
        std::cerr << "quadrature budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
