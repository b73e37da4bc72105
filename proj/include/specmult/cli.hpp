#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "specmult/estimates.hpp"
#include "specmult/vecspace.hpp"

namespace specmult::cli {

/// Resolved run configuration; parses from "key = value" lines, unknown keys
/// rejected, CLI overrides applied on top.
struct RunConfig {
    std::string family = "hermite"; // classical|hermite|ou|laguerre
    Real alpha = 0.5;               // laguerre only
    std::string symbol = "one";
    int trunc_k = 400;
    Real abs_tol = 1e-10;
    Real rel_tol = 1e-8;
    int max_subdivisions = 4000;
    Real grid_min = -4.0;
    Real grid_max = 4.0;
    // scan y-window; NaN means "same as the x-window"
    Real grid_y_min = std::numeric_limits<Real>::quiet_NaN();
    Real grid_y_max = std::numeric_limits<Real>::quiet_NaN();
    int grid_n = 25;
    Real compare_tol = 1e-3;
    std::string inequality = "cz"; // cz | laguerre:a..laguerre:d
    std::string gammas = "0,0.5,1,2,4";
    Real q = 2.0;
    Real p = 2.0;
    int dim = 3;
    int corpus_size = 4;
    unsigned seed = 20240915;
    std::string output; // CSV path ("" = stdout)
    std::string json_output;

    /// Every key with its resolved value, in sorted order (report headers).
    std::vector<std::pair<std::string, std::string>> items() const;
};

/// Parse a config file; throws std::invalid_argument naming any bad key.
RunConfig load_config(const std::string& path);

/// Apply "key=value" overrides (CLI flags win over file keys).
void apply_override(RunConfig& cfg, const std::string& assignment);

KernelFamily family_from(const RunConfig& cfg);
Tolerance tolerance_from(const RunConfig& cfg);

// Exit codes: 0 success, 1 tolerance failure, 2 config error, 3 numerical failure.
int cmd_kernel(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);
int cmd_scan(const RunConfig& cfg);
int cmd_probe(const RunConfig& cfg);

} // namespace specmult::cli
