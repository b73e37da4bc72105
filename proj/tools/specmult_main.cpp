#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specmult/cli.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output;
    std::string json_output;
};

void attach(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "key = value config file");
    sub->add_option("--set", args.overrides, "override a config key, key=value (repeatable)");
    sub->add_option("--output", args.output, "CSV output path (default stdout)");
    sub->add_option("--json", args.json_output, "JSON mirror output path");
}

int resolve_and_run(const CommonArgs& args, int (*command)(const specmult::cli::RunConfig&)) {
    specmult::cli::RunConfig cfg;
    try {
        if (!args.config_path.empty()) cfg = specmult::cli::load_config(args.config_path);
        for (const std::string& ov : args.overrides) specmult::cli::apply_override(cfg, ov);
        if (!args.output.empty()) cfg.output = args.output;
        if (!args.json_output.empty()) cfg.json_output = args.json_output;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return command(cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplace-transform-type spectral multipliers: kernels, comparisons, scans"};
    app.require_subcommand(1);

    CommonArgs kernel_args, compare_args, scan_args, probe_args;
    CLI::App* kernel = app.add_subcommand("kernel", "tabulate the singular-integral kernel");
    attach(kernel, kernel_args);
    CLI::App* compare = app.add_subcommand("compare", "spectral vs principal-value evaluation");
    attach(compare, compare_args);
    CLI::App* scan = app.add_subcommand("scan", "kernel inequality certification sweep");
    attach(scan, scan_args);
    CLI::App* probe = app.add_subcommand("probe", "imaginary-power norm ratios across gamma");
    attach(probe, probe_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (kernel->parsed()) return resolve_and_run(kernel_args, specmult::cli::cmd_kernel);
    if (compare->parsed()) return resolve_and_run(compare_args, specmult::cli::cmd_compare);
    if (scan->parsed()) return resolve_and_run(scan_args, specmult::cli::cmd_scan);
    if (probe->parsed()) return resolve_and_run(probe_args, specmult::cli::cmd_probe);
    return 2;
}
