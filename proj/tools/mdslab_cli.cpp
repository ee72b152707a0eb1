// Command-line front end: single-point coefficients and observables,
// configurable grid sweeps, figure presets, and the self-test runner.
//
// Exit codes: 0 success, 1 configuration error, 2 self-test failure,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mdslab/mdslab.hpp"

namespace {

struct MaterialFlags {
    double eps_inf = mdslab::fig2_material.eps_inf;
    double mu_inf = mdslab::fig2_material.mu_inf;
    double omega_pe = mdslab::fig2_material.omega_pe;
    double omega_pm = mdslab::fig2_material.omega_pm;
    double gamma_e = mdslab::fig2_material.gamma_e;
    double gamma_m = mdslab::fig2_material.gamma_m;
    double thickness = 1.0;
    std::string config_path;

    mdslab::LorentzParams params() const {
        return {eps_inf, mu_inf, omega_pe, omega_pm, gamma_e, gamma_m};
    }
};

void add_material_flags(CLI::App* cmd, MaterialFlags& m) {
    cmd->add_option("--eps-inf", m.eps_inf, "high-frequency permittivity");
    cmd->add_option("--mu-inf", m.mu_inf, "high-frequency permeability");
    cmd->add_option("--omega-pe", m.omega_pe, "electric plasma frequency (resonance units)");
    cmd->add_option("--omega-pm", m.omega_pm, "magnetic plasma frequency (resonance units)");
    cmd->add_option("--gamma-e", m.gamma_e, "electric damping (resonance units)");
    cmd->add_option("--gamma-m", m.gamma_m, "magnetic damping (resonance units)");
    cmd->add_option("--thickness", m.thickness, "dimensionless slab thickness");
    cmd->add_option("--config", m.config_path,
                    "JSON sweep configuration supplying material and thickness");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mdslab::io_error("cannot open \"" + path + "\" for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw mdslab::io_error("failed reading \"" + path + "\"");
    return ss.str();
}

// Resolves material/thickness from --config when given, flag values otherwise.
std::pair<mdslab::LorentzParams, double> resolve_material(const MaterialFlags& m) {
    if (m.config_path.empty()) return {m.params(), m.thickness};
    const mdslab::SweepConfig cfg = mdslab::parse_sweep_config(read_file(m.config_path));
    return {cfg.material, cfg.thickness_L};
}

mdslab::Polarization parse_pol(const std::string& s) {
    if (s == "x") return mdslab::Polarization::x;
    if (s == "y") return mdslab::Polarization::y;
    throw mdslab::config_error("--pol must be x or y");
}

void print_value(const char* name, double v) {
    std::cout << name << " = " << mdslab::format_number(v) << '\n';
}

void print_value(const char* name, mdslab::cplx v) {
    std::cout << name << " = " << mdslab::format_number(v.real()) << " "
              << (v.imag() < 0 ? "-" : "+") << " " << mdslab::format_number(std::abs(v.imag()))
              << "i\n";
}

void write_rows(const std::vector<mdslab::SweepRow>& rows, mdslab::OutputFormat fmt,
                const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        mdslab::emit(rows, fmt, std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mdslab::io_error("cannot open \"" + out_path + "\" for writing");
    mdslab::emit(rows, fmt, out);
    if (!out) throw mdslab::io_error("failed writing \"" + out_path + "\"");
}

mdslab::OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return mdslab::OutputFormat::csv;
    if (s == "json") return mdslab::OutputFormat::json;
    throw mdslab::config_error("--format must be csv or json");
}

int run_selftest_command() {
    const mdslab::SelftestReport report = mdslab::run_selftest();
    for (const auto& s : report.suites) {
        std::cout << (s.pass ? "PASS" : "FAIL") << "  " << s.name << "  samples=" << s.samples
                  << "  max-deviation=" << mdslab::format_number(s.max_deviation)
                  << "  tolerance=" << mdslab::format_number(s.tolerance) << '\n';
    }
    std::cout << (report.all_pass() ? "self-test passed" : "self-test FAILED") << '\n';
    return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moving magneto-dielectric slab: scattering and quantum observables"};
    app.require_subcommand(1);

    MaterialFlags coeffs_mat, obs_mat;
    double coeffs_w = 1.0, coeffs_beta = 0.0;
    std::string coeffs_pol = "x";
    auto* coeffs = app.add_subcommand("coeffs", "reflection/transmission at one grid point");
    coeffs->add_option("--w", coeffs_w, "dimensionless frequency")->required();
    coeffs->add_option("--beta", coeffs_beta, "slab speed v/c")->check(CLI::Range(-0.999, 0.999));
    coeffs->add_option("--pol", coeffs_pol, "polarization: x or y");
    add_material_flags(coeffs, coeffs_mat);

    double obs_w = 1.0, obs_beta = 0.0, obs_temp = 10.0 / 6.0, obs_alpha = 16.0;
    std::string obs_pol = "x";
    bool obs_zero_temp = false;
    auto* observables = app.add_subcommand("observables", "squeezing and photon statistics");
    observables->add_option("--w", obs_w, "dimensionless frequency")->required();
    observables->add_option("--beta", obs_beta, "slab speed v/c")
        ->check(CLI::Range(-0.999, 0.999));
    observables->add_option("--pol", obs_pol, "polarization: x or y");
    observables->add_option("--temp-ratio", obs_temp,
                            "resonance quantum over k_B*temperature");
    observables->add_flag("--zero-temperature", obs_zero_temp, "use a zero-temperature slab");
    observables->add_option("--alpha-sq", obs_alpha, "mean photon number of the coherent input");
    add_material_flags(observables, obs_mat);

    std::string sweep_config, sweep_format, sweep_out;
    auto* sweep = app.add_subcommand("sweep", "grid sweep from a JSON configuration");
    sweep->add_option("--config", sweep_config, "JSON configuration path")->required();
    sweep->add_option("--format", sweep_format, "csv or json (overrides the configuration)");
    sweep->add_option("--out", sweep_out, "output path (default stdout)");

    std::string figure_name, figure_format = "csv", figure_out;
    auto* figure = app.add_subcommand("figure", "bundled preset sweep (fig2..fig5)");
    figure->add_option("name", figure_name, "fig2 | fig3 | fig4 | fig5")->required();
    figure->add_option("--format", figure_format, "csv or json");
    figure->add_option("--out", figure_out, "output path (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "run the numerical invariant suites");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;  // flag misuse is a configuration error
    }

    try {
        if (coeffs->parsed()) {
            const auto [material, thickness] = resolve_material(coeffs_mat);
            const mdslab::ScatteringResult sc = mdslab::sweep_point(
                material, {thickness}, coeffs_w, coeffs_beta, parse_pol(coeffs_pol));
            print_value("w", coeffs_w);
            print_value("beta", coeffs_beta);
            std::cout << "pol = " << mdslab::to_string(sc.pol) << '\n';
            print_value("R", sc.R);
            print_value("T", sc.T);
            print_value("R2", sc.R2());
            print_value("T2", sc.T2());
            print_value("A", sc.absorptance);
        } else if (observables->parsed()) {
            const auto [material, thickness] = resolve_material(obs_mat);
            const mdslab::ScatteringResult sc = mdslab::sweep_point(
                material, {thickness}, obs_w, obs_beta, parse_pol(obs_pol));
            const mdslab::ThermalEnvironment env{
                obs_zero_temp ? std::numeric_limits<double>::infinity() : obs_temp};
            const mdslab::CoherentInput input{obs_alpha, sc.pol};
            const mdslab::ObservablePoint o =
                mdslab::observables_at(sc, obs_w, obs_beta, env, input);
            print_value("w", obs_w);
            print_value("beta", obs_beta);
            std::cout << "pol = " << mdslab::to_string(sc.pol) << '\n';
            print_value("R2", sc.R2());
            print_value("T2", sc.T2());
            print_value("A", sc.absorptance);
            print_value("N", o.N);
            print_value("noise_flux", o.noise_flux);
            print_value("S_X", o.S_X);
            print_value("S_Y", o.S_Y);
            print_value("Q", o.Q);
        } else if (sweep->parsed()) {
            mdslab::SweepConfig cfg = mdslab::parse_sweep_config(read_file(sweep_config));
            if (!sweep_format.empty()) cfg.format = parse_format(sweep_format);
            write_rows(mdslab::run_sweep(cfg), cfg.format, sweep_out);
        } else if (figure->parsed()) {
            mdslab::SweepConfig cfg = mdslab::figure_preset(figure_name);
            cfg.format = parse_format(figure_format);
            write_rows(mdslab::run_sweep(cfg), cfg.format, figure_out);
        } else if (selftest->parsed()) {
            return run_selftest_command();
        }
    } catch (const mdslab::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const mdslab::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const mdslab::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
