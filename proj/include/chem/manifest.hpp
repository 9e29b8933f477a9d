#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace chem {

struct ManifestStep {
    std::string step_id;
    std::string module;
    std::string verb;
    std::vector<std::string> inputs;  // external files or prior steps' outputs
    std::vector<std::string> outputs; // artifact names, written under workdir
    nlohmann::json params = nlohmann::json::object();
    std::string note;
};

struct PipelineManifest {
    std::uint64_t seed = 0;
    std::string toolkit_version;
    std::vector<ManifestStep> steps;

    nlohmann::ordered_json to_json() const;
    static PipelineManifest from_json(const nlohmann::json& j);
};

// Validates the step graph: verbs legal, output names unique, inputs resolve
// to an external file (relative to base_dir) or a prior step's output, and
// the graph is acyclic. Returns the manifest with steps in topological order.
PipelineManifest build_manifest(std::vector<ManifestStep> steps, std::uint64_t seed,
                                const std::filesystem::path& base_dir = ".");

struct StepRecord {
    std::string step_id;
    std::string status; // ok | failed | skipped
    std::map<std::string, std::string> input_hashes;
    std::map<std::string, std::string> output_hashes;
    long duration_ms = 0;
    std::string error;
};

struct RunRecord {
    std::vector<StepRecord> steps;
    std::string record_hash; // over step ids, statuses, and content hashes only
    bool ok = false;
    bool validation_failure = false;

    nlohmann::ordered_json to_json() const;
};

// Executes steps in topological order, writing every output under workdir.
// A step failure halts the run; later steps are recorded as skipped.
RunRecord run_manifest(const PipelineManifest& manifest, const std::filesystem::path& workdir,
                       const std::filesystem::path& base_dir = ".");

} // namespace chem
