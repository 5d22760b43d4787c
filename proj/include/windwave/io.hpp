#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "windwave/core.hpp"
#include "windwave/dispersion.hpp"
#include "windwave/height_pde.hpp"

namespace windwave::io {

inline constexpr const char* kToolVersion = "windwave 1.0.0";

/// Numerical knobs with defaults; physics has no defaults.
struct Numerics {
    int gamma_grid = 1025;
    int nq = 16;
    int np_air = 48;
    int np_water = 48;
    int sl_elements = 256;
    int sl_scan_points = 64;
    int strip_nx = 32;
    int strip_ny_air = 256;
    int strip_ny_water = 128;
    double strip_ymax = 8.0;
    double newton_tol = 1e-10;
    int newton_max_iter = 25;
    int k_max = 64;
};

struct ConfigFile {
    PhysicalConfig physical;
    Numerics numerics;
};

ConfigFile load_config(const std::filesystem::path& path);
ConfigFile parse_config(const std::string& json_text);

/// 17-significant-digit shortest-round-trip formatting used in every output.
std::string format_double(double v);

/// RFC-4180 CSV writer: CRLF records, '.' decimal, quoting only when needed.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(const std::vector<std::string>& fields);
    std::string str() const { return body_; }
    void write(const std::filesystem::path& path) const;

private:
    static std::string escape(const std::string& f);
    std::size_t width_;
    std::string body_;
};

/// FNV-1a 64-bit hash, hex-encoded; used to stamp outputs with the manifest.
std::string fnv1a_hex(const std::string& bytes);

struct RunManifest {
    std::string config_path;
    std::string subcommand;
    std::string resolved_params_json;  ///< canonical dump of the parsed config
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    std::string out_dir;

    std::string to_json() const;
};

/// Writes manifest.json into out_dir (before any computation output) and
/// returns the manifest hash that outputs must reference.
std::string write_manifest(const RunManifest& m);

std::string bifurcation_to_json(const PhysicalConfig& cfg, const BifurcationPoint& bp,
                                const std::string& manifest_hash);
std::string infeasible_to_json(const PhysicalConfig& cfg, const std::string& condition,
                               const std::string& message, const std::string& manifest_hash);

}  // namespace windwave::io
