// Command-line front-end: ingest graphs and parameter files, run the
// verification suites, and emit machine-readable reports.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "lef/cli.hpp"

int main(int argc, char** argv) {
    using lef::cli::RunConfig;

    CLI::App app{
        "Exact spectral/geometric verification on regular graphs: q-adic "
        "eigenvalue absolute values, torus root data, higher Euler "
        "characteristics, contraction regions, and the rank-one Lefschetz "
        "trace identity."};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    const std::map<std::string, RunConfig::Format> format_map{
        {"json", RunConfig::Format::Json},
        {"csv", RunConfig::Format::Csv},
        {"text", RunConfig::Format::Text},
    };

    auto add_common = [&](CLI::App* sub, bool needs_input, bool input_optional) {
        if (needs_input) {
            auto* opt = sub->add_option("input", cfg.input_path, "input file");
            if (!input_optional) opt->required();
        }
        sub->add_option("--m-max", cfg.m_max, "largest length/level to check (<= 32)");
        sub->add_option("--out", cfg.out_path, "write the report to this path");
        sub->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--random", cfg.random_count,
                        "run the randomized property suite with this many cases");
    };

    auto* newton = app.add_subcommand(
        "newton", "Newton-polygon slopes and eigenvalue absolute values");
    add_common(newton, true, true);
    auto* region = app.add_subcommand(
        "region", "eigenvalue contraction region and the determinant identity");
    add_common(region, true, true);
    auto* euler = app.add_subcommand(
        "euler", "higher Euler characteristics and the central-extension identity");
    add_common(euler, true, true);
    auto* lefschetz = app.add_subcommand(
        "lefschetz", "three-route verification of the trace identity on a graph");
    add_common(lefschetz, true, false);
    lefschetz->add_option("--twist", cfg.twist_path, "edge-character weight file");
    auto* hecke = app.add_subcommand(
        "hecke", "Hecke operator recurrence and spectral-mapping checks");
    add_common(hecke, true, false);

    CLI11_PARSE(app, argc, argv);

    if (newton->parsed()) cfg.command = RunConfig::Command::Newton;
    if (region->parsed()) cfg.command = RunConfig::Command::Region;
    if (euler->parsed()) cfg.command = RunConfig::Command::Euler;
    if (lefschetz->parsed()) cfg.command = RunConfig::Command::Lefschetz;
    if (hecke->parsed()) cfg.command = RunConfig::Command::Hecke;
    cfg.format = format_map.at(format);

    if (cfg.input_path.empty() && cfg.random_count == 0) {
        std::cerr << "input error: provide an input file or --random <n>\n";
        return 2;
    }
    return lef::cli::run(cfg, std::cout, std::cerr);
}
