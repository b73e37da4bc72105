#include "specmult/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "specmult/corpora.hpp"

namespace specmult::cli {

namespace {

std::string num(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
};

void write_report(const Report& rep, const RunConfig& cfg) {
    std::ostringstream csv;
    csv << "# specmult " << rep.command << " report\n";
    for (const auto& [k, v] : rep.config) csv << "# " << k << " = " << v << "\n";
    for (const auto& [k, v] : rep.summary) csv << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        csv << rep.columns[i] << (i + 1 < rep.columns.size() ? "," : "");
    csv << "\n";
    for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            csv << row[i] << (i + 1 < row.size() ? "," : "");
        csv << "\n";
    }
    if (cfg.output.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write output '" + cfg.output + "'");
        out << csv.str();
    }
    if (!cfg.json_output.empty()) {
        nlohmann::json j;
        j["command"] = rep.command;
        for (const auto& [k, v] : rep.config) j["config"][k] = v;
        for (const auto& [k, v] : rep.summary) j["summary"][k] = v;
        j["columns"] = rep.columns;
        j["rows"] = rep.rows;
        std::ofstream out(cfg.json_output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write output '" + cfg.json_output + "'");
        out << j.dump(2) << "\n";
    }
}

std::vector<Real> parse_list(const std::string& csv) {
    std::vector<Real> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("config: empty numeric list");
    return out;
}

int numeric_guard(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int cmd_kernel(const RunConfig& cfg) {
    return numeric_guard([&]() {
        const KernelFamily family = family_from(cfg);
        const MultiplierSymbol sym = parse_symbol(cfg.symbol);
        const Tolerance tol = tolerance_from(cfg);
        if (!(cfg.grid_min < cfg.grid_max) || cfg.grid_n < 2)
            throw std::invalid_argument("config: bad grid");
        const Real delta = (cfg.grid_max - cfg.grid_min) / (cfg.grid_n - 1);

        Report rep;
        rep.command = "kernel";
        rep.config = cfg.items();
        rep.columns = {"x", "y", "re_k", "im_k", "quad_error"};
        for (int i = 0; i < cfg.grid_n; ++i) {
            const Real x = cfg.grid_min + delta * i;
            if (!family.contains(x)) continue;
            for (int j = 0; j < cfg.grid_n; ++j) {
                const Real y = cfg.grid_min + delta * j;
                if (!family.contains(y) || std::abs(x - y) < delta * 0.5) continue;
                const KernelValue kv = multiplier_kernel_detailed(family, sym, x, y, tol);
                rep.rows.push_back({num(x), num(y), num(kv.value.real()), num(kv.value.imag()),
                                    num(kv.quad.error_estimate)});
            }
        }
        write_report(rep, cfg);
        return 0;
    });
}

int cmd_compare(const RunConfig& cfg) {
    return numeric_guard([&]() {
        const KernelFamily family = family_from(cfg);
        if (!family.has_spectrum())
            throw std::invalid_argument("config: compare needs a discrete-spectrum family");
        const MultiplierSymbol sym = parse_symbol(cfg.symbol);
        const Tolerance tol = tolerance_from(cfg);

        Report rep;
        rep.command = "compare";
        rep.config = cfg.items();
        rep.columns = {"bump", "point", "x", "abs_diff", "status"};
        bool all_pass = true;
        const auto bumps = default_bumps(family);
        for (std::size_t b = 0; b < bumps.size(); ++b) {
            const GridFunction f = bump_grid(bumps[b], domain_of(family));
            // project onto the truncation span first so both representations
            // act on the same function and the comparison is unbiased by the
            // expansion tail of the raw bump; the projection is sampled on a
            // window wide enough to catch its out-of-support ripple
            const auto coeffs = spectral_coefficients(family, f, cfg.trunc_k, tol);
            Real lo = f.nodes[0] - 3.0, hi = f.nodes[f.nodes.size() - 1] + 3.0;
            if (family.half_line()) lo = std::max(lo, 1e-3);
            const Vector wide = uniform_grid(lo, hi, 2 * f.size());
            const GridFunction projected(wide, synthesize(family, coeffs.c, wide), f.domain);
            const CVector m = symbol_on_spectrum(family, sym, cfg.trunc_k, tol);
            const CVector weighted = coeffs.c * m;
            const auto points = default_points(bumps[b]);
            for (std::size_t pi = 0; pi < points.size(); ++pi) {
                const Real x = points[pi];
                Vector node(1);
                node[0] = x;
                const Cplx spectral = synthesize(family, weighted, node)[0];
                const Cplx pv = pv_apply(family, sym, projected, x).value;
                const Real diff = std::abs(pv - spectral);
                const bool pass = diff <= cfg.compare_tol;
                all_pass = all_pass && pass;
                rep.rows.push_back({std::to_string(b), std::to_string(pi), num(x), num(diff),
                                    pass ? "PASS" : "FAIL"});
            }
        }
        rep.summary.push_back({"overall", all_pass ? "PASS" : "FAIL"});
        write_report(rep, cfg);
        return all_pass ? 0 : 1;
    });
}

int cmd_scan(const RunConfig& cfg) {
    return numeric_guard([&]() {
        const MultiplierSymbol sym = parse_symbol(cfg.symbol);
        const Tolerance tol = tolerance_from(cfg);
        const Real y_min = std::isnan(cfg.grid_y_min) ? cfg.grid_min : cfg.grid_y_min;
        const Real y_max = std::isnan(cfg.grid_y_max) ? cfg.grid_max : cfg.grid_y_max;
        GridSpec2D grid{cfg.grid_min, cfg.grid_max, y_min, y_max, cfg.grid_n};

        std::vector<ScanReport> reports;
        if (cfg.inequality == "cz") {
            const auto [r1, r2] = cz_scan(family_from(cfg), sym, grid, tol);
            reports = {r1, r2};
        } else if (cfg.inequality == "laguerre:a") {
            reports = {laguerre_bound_scan(cfg.alpha, sym, LaguerreBound::GlobalHermite, grid, tol)};
        } else if (cfg.inequality == "laguerre:b") {
            reports = {laguerre_bound_scan(cfg.alpha, sym, LaguerreBound::OppositeSign, grid, tol)};
        } else if (cfg.inequality == "laguerre:c") {
            reports = {laguerre_bound_scan(cfg.alpha, sym, LaguerreBound::GlobalLaguerre, grid, tol)};
        } else if (cfg.inequality == "laguerre:d") {
            reports = {laguerre_bound_scan(cfg.alpha, sym, LaguerreBound::LocalDifference, grid, tol)};
        } else {
            throw std::invalid_argument("config: unknown inequality '" + cfg.inequality + "'");
        }

        Report rep;
        rep.command = "scan";
        rep.config = cfg.items();
        rep.columns = {"id", "x", "y", "ratio"};
        bool stable = true;
        for (const ScanReport& r : reports) {
            rep.summary.push_back({r.id + "_constant", num(r.empirical_constant)});
            rep.summary.push_back({r.id + "_drift", num(r.refinement_drift)});
            rep.summary.push_back({r.id + "_conclusive", r.conclusive ? "yes" : "no"});
            stable = stable && r.conclusive;
            for (const auto& row : r.samples)
                rep.rows.push_back({r.id, num(row[0]), num(row[1]), num(row[2])});
        }
        write_report(rep, cfg);
        return stable ? 0 : 1;
    });
}

int cmd_probe(const RunConfig& cfg) {
    return numeric_guard([&]() {
        const KernelFamily family = family_from(cfg);
        if (!family.has_spectrum())
            throw std::invalid_argument("config: probe needs a discrete-spectrum family");
        const Tolerance tol = tolerance_from(cfg);
        const std::vector<Real> gammas = parse_list(cfg.gammas);
        const CoordinateSpace space(cfg.q, cfg.dim);
        const auto corpus = vector_corpus(family, cfg.dim, cfg.corpus_size, cfg.seed);
        const auto rows =
            gamma_norm_probe(family, cfg.p, space, gammas, corpus, {cfg.trunc_k}, tol);

        Report rep;
        rep.command = "probe";
        rep.config = cfg.items();
        rep.columns = {"gamma", "f_index", "ratio"};
        for (const ProbeRow& r : rows)
            rep.rows.push_back({num(r.gamma), std::to_string(r.f_index), num(r.ratio)});
        write_report(rep, cfg);
        return 0;
    });
}

} // namespace specmult::cli
