#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "percher/cli.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"Perching claw mechanism analysis"};
    app.require_subcommand(1);

    const char* env_out = std::getenv("PERCHER_OUTPUT_DIR");
    std::optional<fs::path> env_dir;
    if (env_out && *env_out) env_dir = fs::path(env_out);

    std::string scenario;
    auto* run = app.add_subcommand("run", "Run every analysis in a scenario file");
    run->add_option("scenario", scenario, "Scenario JSON")->required();

    std::string tables_out = "tables_out";
    std::optional<double> gamma_override;
    auto* tables = app.add_subcommand("tables", "Regenerate the claw dimension table and diff it against the reference");
    tables->add_option("--out", tables_out, "Output directory");
    tables->add_option("--gamma", gamma_override, "Override the Hoberman bend angle (deg)");

    percher::SweepArgs sw;
    std::string sweep_out = "sweep_out";
    auto* sweep = app.add_subcommand("sweep", "Hoberman output force over bend angle and base rib angle");
    sweep->add_option("--gamma-min", sw.gamma_min, "deg");
    sweep->add_option("--gamma-max", sw.gamma_max, "deg");
    sweep->add_option("--gamma-step", sw.gamma_step, "deg");
    sweep->add_option("--epsilon-min", sw.eps_min, "deg");
    sweep->add_option("--epsilon-max", sw.eps_max, "deg");
    sweep->add_option("--epsilon-step", sw.eps_step, "deg");
    sweep->add_option("--payload", sw.payload_g, "g");
    sweep->add_option("--out", sweep_out, "Output directory");

    auto* version = app.add_subcommand("version", "Print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : percher::kExitInput;
    }

    try {
        if (*run) return percher::run_scenario(scenario, std::cerr, env_dir);
        if (*tables) return percher::regenerate_tables(env_dir ? *env_dir : fs::path(tables_out), std::cerr, gamma_override);
        if (*sweep) return percher::run_sweep(env_dir ? *env_dir : fs::path(sweep_out), sw, std::cerr);
        if (*version) {
            std::cout << percher::tool_version() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return percher::kExitModel;
    }
    return 0;
}
