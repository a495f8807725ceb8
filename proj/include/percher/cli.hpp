#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "percher/claw_design.hpp"

namespace percher {

constexpr const char* kDesignSchema = "percher_design_v1";
constexpr const char* kScenarioSchema = "percher_scenario_v1";

std::string tool_version();

nlohmann::ordered_json design_to_json(const ClawDesign& d);
// Strict: unknown fields and missing required fields raise InputError.
ClawDesign design_from_json(const nlohmann::json& j, const std::string& where = "design");
std::string design_hash(const ClawDesign& d);

enum ExitCode { kExitOk = 0, kExitInput = 2, kExitModel = 3 };

// Runs every analysis in the scenario. out_override (PERCHER_OUTPUT_DIR) beats the
// scenario's output_dir; a relative output_dir resolves against the scenario file.
int run_scenario(const std::filesystem::path& scenario, std::ostream& log,
                 const std::optional<std::filesystem::path>& out_override = std::nullopt);

// Sized default design, its diff against the reference, and the flagged formula path.
int regenerate_tables(const std::filesystem::path& out_dir, std::ostream& log,
                      std::optional<double> gamma_override_deg = std::nullopt);

struct SweepArgs {
    double gamma_min = 90, gamma_max = 180, gamma_step = 10;
    double eps_min = -120, eps_max = 120, eps_step = 0.5;
    double payload_g = 100;
};

int run_sweep(const std::filesystem::path& out_dir, const SweepArgs& args, std::ostream& log);

}  // namespace percher
