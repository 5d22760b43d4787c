#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "windwave/io.hpp"

namespace windwave::cli {

struct CommonArgs {
    std::filesystem::path config_path;
    std::filesystem::path out_dir = "out";
    std::uint64_t seed = 0;
    int threads = 0;       ///< 0: library default
    int grid_refine = 0;   ///< halves every grid spacing this many times
};

/// exit codes: 0 ok, 2 infeasible condition, 3 numerical failure, 4 bad input
int cmd_laminar(const CommonArgs& args, double lambda_min, double lambda_max, int count);
int cmd_bifurcate(const CommonArgs& args, int mode);
int cmd_branch(const CommonArgs& args, double s_max, int steps);
int cmd_multiplier(const CommonArgs& args, int k_max, double lambda_min, double lambda_max,
                   int count);
int cmd_verify(const CommonArgs& args);

/// applies --grid-refine to the numeric knobs
io::Numerics refined(io::Numerics n, int k);

}  // namespace windwave::cli
