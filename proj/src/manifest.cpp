#include "chem/manifest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "chem/error.hpp"
#include "chem/hash.hpp"
#include "chem/verbs.hpp"

namespace chem {

nlohmann::ordered_json PipelineManifest::to_json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["toolkit_version"] = toolkit_version;
    auto steps_j = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json sj;
        sj["step_id"] = s.step_id;
        sj["module"] = s.module;
        sj["verb"] = s.verb;
        sj["inputs"] = s.inputs;
        sj["outputs"] = s.outputs;
        sj["params"] = s.params;
        if (!s.note.empty()) sj["note"] = s.note;
        steps_j.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps_j);
    return j;
}

PipelineManifest PipelineManifest::from_json(const nlohmann::json& j) {
    PipelineManifest m;
    m.seed = j.at("seed").get<std::uint64_t>();
    m.toolkit_version = j.value("toolkit_version", "");
    for (const auto& sj : j.at("steps")) {
        ManifestStep s;
        s.step_id = sj.at("step_id").get<std::string>();
        s.module = sj.at("module").get<std::string>();
        s.verb = sj.at("verb").get<std::string>();
        s.inputs = sj.value("inputs", std::vector<std::string>{});
        s.outputs = sj.value("outputs", std::vector<std::string>{});
        s.params = sj.value("params", nlohmann::json::object());
        s.note = sj.value("note", "");
        m.steps.push_back(std::move(s));
    }
    return m;
}

PipelineManifest build_manifest(std::vector<ManifestStep> steps, std::uint64_t seed,
                                const std::filesystem::path& base_dir) {
    std::set<std::string> ids;
    std::map<std::string, size_t> producer; // output name -> step index
    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (s.step_id.empty()) throw Error("step " + std::to_string(i) + ": empty step_id");
        if (!ids.insert(s.step_id).second) {
            throw Error("duplicate step_id '" + s.step_id + "'");
        }
        if (!is_verb(s.verb)) {
            throw Error("step '" + s.step_id + "': unknown verb '" + s.verb +
                        "'; legal verbs: " + verb_list());
        }
        for (const auto& out : s.outputs) {
            if (!producer.emplace(out, i).second) {
                throw Error("output '" + out + "' produced by more than one step");
            }
        }
    }

    // Dependency edges; anything not produced by a step must exist on disk.
    std::vector<std::vector<size_t>> deps(steps.size());
    for (size_t i = 0; i < steps.size(); ++i) {
        for (const auto& in : steps[i].inputs) {
            auto it = producer.find(in);
            if (it != producer.end()) {
                deps[i].push_back(it->second);
            } else {
                std::filesystem::path p(in);
                if (!p.is_absolute()) p = base_dir / p;
                if (!std::filesystem::exists(p)) {
                    throw Error("step '" + steps[i].step_id + "': input '" + in +
                                "' is neither an existing file nor a step output");
                }
            }
        }
    }

    // DFS topological sort; a back edge names the cycle.
    std::vector<int> color(steps.size(), 0); // 0 white, 1 gray, 2 black
    std::vector<size_t> order;
    std::vector<size_t> stack;
    std::function<void(size_t)> visit = [&](size_t i) {
        color[i] = 1;
        stack.push_back(i);
        for (size_t d : deps[i]) {
            if (color[d] == 1) {
                std::string cycle;
                auto it = std::find(stack.begin(), stack.end(), d);
                for (; it != stack.end(); ++it) cycle += steps[*it].step_id + " -> ";
                cycle += steps[d].step_id;
                throw Error("manifest contains a cycle: " + cycle);
            }
            if (color[d] == 0) visit(d);
        }
        stack.pop_back();
        color[i] = 2;
        order.push_back(i);
    };
    for (size_t i = 0; i < steps.size(); ++i) {
        if (color[i] == 0) visit(i);
    }

    PipelineManifest m;
    m.seed = seed;
    m.toolkit_version = "0.1.0";
    for (size_t i : order) m.steps.push_back(std::move(steps[i]));
    return m;
}

nlohmann::ordered_json RunRecord::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    j["validation_failure"] = validation_failure;
    j["record_hash"] = record_hash;
    auto steps_j = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json sj;
        sj["step_id"] = s.step_id;
        sj["status"] = s.status;
        sj["input_hashes"] = s.input_hashes;
        sj["output_hashes"] = s.output_hashes;
        sj["duration_ms"] = s.duration_ms;
        if (!s.error.empty()) sj["error"] = s.error;
        steps_j.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps_j);
    return j;
}

} // namespace chem
