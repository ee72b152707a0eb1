#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdslab/errors.hpp"
#include "mdslab/observables.hpp"
#include "mdslab/scattering.hpp"

namespace mdslab {

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 1;

    double value(std::size_t i) const {
        if (count <= 1) return min;
        return min + static_cast<double>(i) * (max - min) / static_cast<double>(count - 1);
    }
};

enum class OutputFormat { csv, json };

struct SweepConfig {
    LorentzParams material;
    double thickness_L = 1.0;
    GridSpec w_grid;
    GridSpec beta_grid;
    double t_thermal = std::numeric_limits<double>::infinity();
    double alpha_sq = 0.0;
    std::vector<Polarization> polarizations;
    bool emit_coefficients = true;
    bool emit_observables = false;
    OutputFormat format = OutputFormat::csv;
};

struct SweepRow {
    double w = 0.0;
    double beta = 0.0;
    Polarization pol = Polarization::x;
    double R2 = 0.0;
    double T2 = 0.0;
    double A = 0.0;
    double S_X = 0.0;
    double Q = 0.0;
    double N = 0.0;
    std::string flag;  // empty on success, reason token on per-point failure
};

namespace config_detail {

inline void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known)
            throw config_error(std::string("unknown key \"") + item.key() + "\" in " + where);
    }
}

inline double number_at(const nlohmann::json& j, const char* key, const char* where) {
    if (!j.contains(key))
        throw config_error(std::string("missing key \"") + key + "\" in " + where);
    if (!j.at(key).is_number())
        throw config_error(std::string("key \"") + key + "\" in " + where + " must be a number");
    return j.at(key).get<double>();
}

inline GridSpec parse_grid(const nlohmann::json& j, const char* where) {
    if (!j.is_object()) throw config_error(std::string(where) + " must be an object");
    require_keys(j, {"min", "max", "count"}, where);
    GridSpec g;
    g.min = number_at(j, "min", where);
    g.max = number_at(j, "max", where);
    const double count = number_at(j, "count", where);
    if (count < 1 || count != std::floor(count))
        throw config_error(std::string(where) + ".count must be a positive integer");
    g.count = static_cast<std::size_t>(count);
    return g;
}

}  // namespace config_detail

/// Strict parse: unknown keys anywhere are rejected. t_thermal accepts a
/// number or the string "inf" (zero temperature).
inline SweepConfig parse_sweep_config(const nlohmann::json& j) {
    using namespace config_detail;
    if (!j.is_object()) throw config_error("configuration root must be an object");
    require_keys(j,
                 {"material", "thickness_L", "w_grid", "beta_grid", "t_thermal", "alpha_sq",
                  "polarizations", "outputs", "format"},
                 "configuration");

    SweepConfig cfg;
    if (!j.contains("material") || !j.at("material").is_object())
        throw config_error("configuration requires a material object");
    const auto& m = j.at("material");
    require_keys(m, {"eps_inf", "mu_inf", "omega_pe", "omega_pm", "gamma_e", "gamma_m"},
                 "material");
    cfg.material.eps_inf = number_at(m, "eps_inf", "material");
    cfg.material.mu_inf = number_at(m, "mu_inf", "material");
    cfg.material.omega_pe = number_at(m, "omega_pe", "material");
    cfg.material.omega_pm = number_at(m, "omega_pm", "material");
    cfg.material.gamma_e = number_at(m, "gamma_e", "material");
    cfg.material.gamma_m = number_at(m, "gamma_m", "material");
    if (cfg.material.eps_inf <= 0 || cfg.material.mu_inf <= 0)
        throw config_error("material eps_inf and mu_inf must be positive");
    if (cfg.material.omega_pe < 0 || cfg.material.omega_pm < 0 || cfg.material.gamma_e < 0 ||
        cfg.material.gamma_m < 0)
        throw config_error("material plasma and damping constants must be non-negative");

    cfg.thickness_L = number_at(j, "thickness_L", "configuration");
    if (!(cfg.thickness_L > 0)) throw config_error("thickness_L must be positive");

    cfg.w_grid = parse_grid(j.at("w_grid"), "w_grid");
    cfg.beta_grid = parse_grid(j.at("beta_grid"), "beta_grid");
    if (!(cfg.w_grid.min > 0)) throw config_error("w_grid.min must be positive");
    if (cfg.w_grid.max < cfg.w_grid.min || cfg.beta_grid.max < cfg.beta_grid.min)
        throw config_error("grid max must not be below min");
    if (std::abs(cfg.beta_grid.min) > 0.999 || std::abs(cfg.beta_grid.max) > 0.999)
        throw config_error("|beta| must not exceed 0.999");

    if (j.contains("t_thermal")) {
        const auto& t = j.at("t_thermal");
        if (t.is_string() && (t.get<std::string>() == "inf" || t.get<std::string>() == "infinity"))
            cfg.t_thermal = std::numeric_limits<double>::infinity();
        else if (t.is_number()) {
            cfg.t_thermal = t.get<double>();
            if (!(cfg.t_thermal > 0)) throw config_error("t_thermal must be positive");
        } else
            throw config_error("t_thermal must be a number or \"inf\"");
    }
    if (j.contains("alpha_sq")) {
        cfg.alpha_sq = number_at(j, "alpha_sq", "configuration");
        if (cfg.alpha_sq < 0) throw config_error("alpha_sq must be non-negative");
    }

    if (!j.contains("polarizations") || !j.at("polarizations").is_array() ||
        j.at("polarizations").empty())
        throw config_error("polarizations must be a non-empty array");
    for (const auto& p : j.at("polarizations")) {
        if (p == "x")
            cfg.polarizations.push_back(Polarization::x);
        else if (p == "y")
            cfg.polarizations.push_back(Polarization::y);
        else
            throw config_error("polarizations entries must be \"x\" or \"y\"");
    }

    if (!j.contains("outputs") || !j.at("outputs").is_array() || j.at("outputs").empty())
        throw config_error("outputs must be a non-empty array");
    cfg.emit_coefficients = false;
    cfg.emit_observables = false;
    for (const auto& o : j.at("outputs")) {
        if (o == "coefficients")
            cfg.emit_coefficients = true;
        else if (o == "observables")
            cfg.emit_observables = true;
        else
            throw config_error("outputs entries must be \"coefficients\" or \"observables\"");
    }

    if (j.contains("format")) {
        const auto& f = j.at("format");
        if (f == "csv")
            cfg.format = OutputFormat::csv;
        else if (f == "json")
            cfg.format = OutputFormat::json;
        else
            throw config_error("format must be \"csv\" or \"json\"");
    }
    return cfg;
}

inline SweepConfig parse_sweep_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("configuration is not valid JSON: ") + e.what());
    }
    return parse_sweep_config(j);
}

namespace sweep_detail {

inline const char* failure_token(const error& e) {
    if (dynamic_cast<const cherenkov_error*>(&e)) return "cherenkov-singularity";
    if (dynamic_cast<const pole_error*>(&e)) return "resonance-pole";
    if (dynamic_cast<const consistency_error*>(&e)) return "consistency-guard";
    return "error";
}

}  // namespace sweep_detail

/// Evaluates the full grid in row-major order: w outer, beta inner,
/// polarization innermost. Rows are keyed by index, so the output order does
/// not depend on how the evaluation is scheduled. Per-point failures become
/// flagged rows with quiet-NaN numeric fields.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    const std::size_t total = cfg.w_grid.count * cfg.beta_grid.count * cfg.polarizations.size();
    std::vector<SweepRow> rows(total);
    const SlabGeometry geom{cfg.thickness_L};
    const ThermalEnvironment env{cfg.t_thermal};
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::size_t idx = 0;
    for (std::size_t i = 0; i < cfg.w_grid.count; ++i) {
        const double w = cfg.w_grid.value(i);
        for (std::size_t j = 0; j < cfg.beta_grid.count; ++j) {
            const double beta = cfg.beta_grid.value(j);
            for (const Polarization pol : cfg.polarizations) {
                SweepRow& row = rows[idx++];
                row.w = w;
                row.beta = beta;
                row.pol = pol;
                try {
                    const ScatteringResult sc = sweep_point(cfg.material, geom, w, beta, pol);
                    row.R2 = sc.R2();
                    row.T2 = sc.T2();
                    row.A = sc.absorptance;
                    if (cfg.emit_observables) {
                        const CoherentInput input{cfg.alpha_sq, pol};
                        const ObservablePoint o = observables_at(sc, w, beta, env, input);
                        row.S_X = o.S_X;
                        row.Q = o.Q;
                        row.N = o.N;
                    }
                } catch (const error& e) {
                    row.R2 = row.T2 = row.A = row.S_X = row.Q = row.N = nan;
                    row.flag = sweep_detail::failure_token(e);
                }
            }
        }
    }
    return rows;
}

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Fixed schema, comma separators, LF endings, 17 significant digits:
/// repeated runs of the same configuration are byte-identical.
inline void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "w,beta,pol,R2,T2,A,S_X,Q,N,flag\n";
    for (const auto& r : rows) {
        out << format_number(r.w) << ',' << format_number(r.beta) << ',' << to_string(r.pol)
            << ',' << format_number(r.R2) << ',' << format_number(r.T2) << ','
            << format_number(r.A) << ',' << format_number(r.S_X) << ',' << format_number(r.Q)
            << ',' << format_number(r.N) << ',' << r.flag << '\n';
    }
}

/// Array of row objects with the CSV field names; non-finite values are
/// emitted as null.
inline void emit_json(const std::vector<SweepRow>& rows, std::ostream& out) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["w"] = r.w;
        o["beta"] = r.beta;
        o["pol"] = to_string(r.pol);
        o["R2"] = r.R2;
        o["T2"] = r.T2;
        o["A"] = r.A;
        o["S_X"] = r.S_X;
        o["Q"] = r.Q;
        o["N"] = r.N;
        o["flag"] = r.flag;
        arr.push_back(std::move(o));
    }
    out << arr.dump(1) << '\n';
}

inline void emit(const std::vector<SweepRow>& rows, OutputFormat fmt, std::ostream& out) {
    if (fmt == OutputFormat::csv)
        emit_csv(rows, out);
    else
        emit_json(rows, out);
}

/// Bundled figure-reproduction presets over the canonical material.
inline SweepConfig figure_preset(const std::string& name) {
    SweepConfig cfg;
    cfg.material = fig2_material;
    cfg.thickness_L = 1.0;
    cfg.w_grid = {0.5, 2.0, 200};
    cfg.beta_grid = {-0.99, 0.99, 200};
    cfg.emit_coefficients = true;
    cfg.emit_observables = false;
    cfg.polarizations = {Polarization::x};
    if (name == "fig2") {
        return cfg;
    }
    if (name == "fig3") {
        cfg.polarizations = {Polarization::y};
        return cfg;
    }
    if (name == "fig4" || name == "fig5") {
        cfg.emit_observables = true;
        cfg.t_thermal = 10.0 / 6.0;
        cfg.alpha_sq = 16.0;
        return cfg;
    }
    throw config_error("unknown figure preset \"" + name + "\" (expected fig2..fig5)");
}

}  // namespace mdslab
