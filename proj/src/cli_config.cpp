#include "specmult/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace specmult::cli {

namespace {

std::string fmt_real(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Real parse_real(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    Real r;
    try {
        r = std::stod(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for key '" + key + "'");
    }
    if (used != v.size()) throw std::invalid_argument("config: bad numeric value for key '" + key + "'");
    return r;
}

int parse_int(const std::string& key, const std::string& v) {
    const Real r = parse_real(key, v);
    const int i = static_cast<int>(r);
    if (static_cast<Real>(i) != r) throw std::invalid_argument("config: key '" + key + "' must be an integer");
    return i;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "family") cfg.family = value;
    else if (key == "alpha") cfg.alpha = parse_real(key, value);
    else if (key == "symbol") cfg.symbol = value;
    else if (key == "trunc_k") cfg.trunc_k = parse_int(key, value);
    else if (key == "abs_tol") cfg.abs_tol = parse_real(key, value);
    else if (key == "rel_tol") cfg.rel_tol = parse_real(key, value);
    else if (key == "max_subdivisions") cfg.max_subdivisions = parse_int(key, value);
    else if (key == "grid_min") cfg.grid_min = parse_real(key, value);
    else if (key == "grid_max") cfg.grid_max = parse_real(key, value);
    else if (key == "grid_y_min") cfg.grid_y_min = parse_real(key, value);
    else if (key == "grid_y_max") cfg.grid_y_max = parse_real(key, value);
    else if (key == "grid_n") cfg.grid_n = parse_int(key, value);
    else if (key == "compare_tol") cfg.compare_tol = parse_real(key, value);
    else if (key == "inequality") cfg.inequality = value;
    else if (key == "gammas") cfg.gammas = value;
    else if (key == "q") cfg.q = value == "inf" ? CoordinateSpace::inf : parse_real(key, value);
    else if (key == "p") cfg.p = parse_real(key, value);
    else if (key == "dim") cfg.dim = parse_int(key, value);
    else if (key == "corpus_size") cfg.corpus_size = parse_int(key, value);
    else if (key == "seed") cfg.seed = static_cast<unsigned>(parse_int(key, value));
    else if (key == "output") cfg.output = value;
    else if (key == "json_output") cfg.json_output = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

} // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::items() const {
    std::vector<std::pair<std::string, std::string>> kv = {
        {"abs_tol", fmt_real(abs_tol)},
        {"alpha", fmt_real(alpha)},
        {"compare_tol", fmt_real(compare_tol)},
        {"corpus_size", std::to_string(corpus_size)},
        {"dim", std::to_string(dim)},
        {"family", family},
        {"gammas", gammas},
        {"grid_max", fmt_real(grid_max)},
        {"grid_min", fmt_real(grid_min)},
        {"grid_y_max", std::isnan(grid_y_max) ? "auto" : fmt_real(grid_y_max)},
        {"grid_y_min", std::isnan(grid_y_min) ? "auto" : fmt_real(grid_y_min)},
        {"grid_n", std::to_string(grid_n)},
        {"inequality", inequality},
        {"json_output", json_output},
        {"max_subdivisions", std::to_string(max_subdivisions)},
        {"output", output},
        {"p", fmt_real(p)},
        {"q", std::isinf(q) ? "inf" : fmt_real(q)},
        {"rel_tol", fmt_real(rel_tol)},
        {"seed", std::to_string(seed)},
        {"symbol", symbol},
        {"trunc_k", std::to_string(trunc_k)},
    };
    return kv;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override '" + assignment + "' is not key=value");
    set_key(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

KernelFamily family_from(const RunConfig& cfg) {
    if (cfg.family == "classical") return KernelFamily::classical();
    if (cfg.family == "hermite") return KernelFamily::hermite();
    if (cfg.family == "ou") return KernelFamily::ornstein_uhlenbeck();
    if (cfg.family == "laguerre") return KernelFamily::laguerre(cfg.alpha);
    throw std::invalid_argument("config: unknown family '" + cfg.family + "'");
}

Tolerance tolerance_from(const RunConfig& cfg) {
    return Tolerance(cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

} // namespace specmult::cli
