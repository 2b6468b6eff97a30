#pragma once

#include "kinlab/config.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinlab {

inline constexpr const char* kVersion = "0.1.0";

// An upstream artifact is absent; the CLI maps it to exit status 2.
struct MissingArtifact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One gate evaluated by a stage. Checks that do not apply to the scenario are not emitted.
struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string detail;
};

json to_json(const Check& c);

struct StageContext {
    ScenarioConfig config;
    std::filesystem::path out;
    int jobs = 1;
};

// Precedence: explicit --output, then KINLAB_OUTPUT, then the config's output_dir
// (resolved against the config directory).
std::filesystem::path output_directory(const ScenarioConfig& c, const std::string& cli_override);

const std::vector<std::string>& stage_names();

// Runs one stage: writes its artifacts, <stage>_checks.json and manifest_<stage>.json
// under ctx.out, and returns the checks in evaluation order.
std::vector<Check> run_stage(const std::string& stage, const StageContext& ctx);

// First failing check, or nullptr.
const Check* first_failure(const std::vector<Check>& checks);

}  // namespace kinlab
