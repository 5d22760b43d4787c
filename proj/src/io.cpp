#include "windwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace windwave::io {

using ordered_json = nlohmann::ordered_json;

namespace {

double require_number(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(std::string("config: missing or non-numeric field '") + key + "'");
    return j[key].get<double>();
}

}  // namespace

ConfigFile parse_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    ConfigFile cf;
    PhysicalConfig& p = cf.physical;
    if (!j.contains("regime") || !j["regime"].is_string())
        throw ConfigError("config: missing 'regime'");
    p.regime = regime_from_name(j["regime"].get<std::string>());
    p.g = require_number(j, "g");
    p.rho_air = require_number(j, "rho_air");
    p.rho_water = require_number(j, "rho_water");
    p.p0 = require_number(j, "p0");
    if (p.lidded()) {
        p.p1 = require_number(j, "p1");
        p.ell = require_number(j, "ell");
    } else {
        p.p1 = 0.0;
        p.depth_d = j.contains("depth_d") ? require_number(j, "depth_d") : 1.0;
    }
    if (p.regime == Regime::LiddedRotational) {
        if (!j.contains("vorticity"))
            throw ConfigError("config: lidded_rotational needs a 'vorticity' block");
        const auto& v = j["vorticity"];
        if (v.contains("const")) {
            p.gamma.coeffs = {v["const"].get<double>()};
        } else if (v.contains("poly") && v["poly"].is_array()) {
            p.gamma.coeffs = v["poly"].get<std::vector<double>>();
        } else {
            throw ConfigError("config: vorticity must be {\"const\": x} or {\"poly\": [...]}");
        }
    }
    if (p.regime == Regime::UnboundedShear) p.gamma0 = require_number(j, "gamma0");
    if (j.contains("period_L")) p.period_L = require_number(j, "period_L");
    p.validate();

    if (j.contains("numerics")) {
        const auto& n = j["numerics"];
        auto geti = [&](const char* k, int dflt) {
            return n.contains(k) ? n[k].get<int>() : dflt;
        };
        auto getd = [&](const char* k, double dflt) {
            return n.contains(k) ? n[k].get<double>() : dflt;
        };
        Numerics& nn = cf.numerics;
        nn.gamma_grid = geti("gamma_grid", nn.gamma_grid);
        nn.nq = geti("nq", nn.nq);
        nn.np_air = geti("np_air", nn.np_air);
        nn.np_water = geti("np_water", nn.np_water);
        nn.sl_elements = geti("sl_elements", nn.sl_elements);
        nn.sl_scan_points = geti("sl_scan_points", nn.sl_scan_points);
        nn.strip_nx = geti("strip_nx", nn.strip_nx);
        nn.strip_ny_air = geti("strip_ny_air", nn.strip_ny_air);
        nn.strip_ny_water = geti("strip_ny_water", nn.strip_ny_water);
        nn.strip_ymax = getd("strip_ymax", nn.strip_ymax);
        nn.newton_tol = getd("newton_tol", nn.newton_tol);
        nn.newton_max_iter = geti("newton_max_iter", nn.newton_max_iter);
        nn.k_max = geti("k_max", nn.k_max);
    }
    return cf;
}

ConfigFile load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
    add_row(header);
}

std::string CsvWriter::escape(const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvWriter::add_row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) throw NumericalError("CsvWriter: ragged row");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) body_ += ',';
        body_ += escape(fields[i]);
    }
    body_ += "\r\n";
}

void CsvWriter::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << body_;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string RunManifest::to_json() const {
    ordered_json j;
    j["tool_version"] = tool_version;
    j["subcommand"] = subcommand;
    j["config_path"] = config_path;
    j["resolved_params"] = ordered_json::parse(resolved_params_json.empty()
                                                   ? std::string("{}")
                                                   : resolved_params_json);
    j["seed"] = seed;
    j["out_dir"] = out_dir;
    return j.dump(2) + "\n";
}

std::string write_manifest(const RunManifest& m) {
    std::filesystem::create_directories(m.out_dir);
    const std::string text = m.to_json();
    std::ofstream out(std::filesystem::path(m.out_dir) / "manifest.json", std::ios::binary);
    if (!out) throw ConfigError("cannot write manifest in " + m.out_dir);
    out << text;
    out.close();
    return fnv1a_hex(text);
}

std::string bifurcation_to_json(const PhysicalConfig& cfg, const BifurcationPoint& bp,
                                const std::string& manifest_hash) {
    ordered_json j;
    j["regime"] = regime_name(cfg.regime);
    j["mode"] = bp.mode;
    j["lambda_star"] = bp.lambda_star;
    if (bp.mu) j["mu"] = *bp.mu;
    ordered_json cond;
    for (const auto& [name, entry] : bp.conditions) {
        cond[name] = {{"value", entry.value}, {"pass", entry.pass}};
    }
    j["condition_report"] = cond;
    if (!bp.eig_p.empty()) {
        j["eigenfunction"] = {{"p", bp.eig_p}, {"M", bp.eig_M}};
    }
    j["manifest_hash"] = manifest_hash;
    return j.dump(2) + "\n";
}

std::string infeasible_to_json(const PhysicalConfig& cfg, const std::string& condition,
                               const std::string& message, const std::string& manifest_hash) {
    ordered_json j;
    j["regime"] = regime_name(cfg.regime);
    j["error"] = "infeasible_condition";
    j["violated_condition"] = condition;
    j["message"] = message;
    j["manifest_hash"] = manifest_hash;
    return j.dump(2) + "\n";
}

}  // namespace windwave::io
