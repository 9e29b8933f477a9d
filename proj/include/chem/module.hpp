#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chem/semver.hpp"

namespace chem {

enum class Lifecycle { experimental, stable, deprecated };

std::string to_string(Lifecycle lc);
Lifecycle lifecycle_from_string(const std::string& s);

enum class SlotKind { parameter, data };

struct SlotDecl {
    std::string name;
    std::string type; // free-form type label, e.g. "number", "table"
    SlotKind kind = SlotKind::parameter;
};

// Immutable after construction; safe to share across threads.
struct ModuleDescriptor {
    std::string name;
    SemVer version;
    std::optional<std::string> parent;
    std::vector<SlotDecl> slots;
    std::vector<std::string> supported_verbs; // kept in VerbSet order
    Lifecycle lifecycle = Lifecycle::experimental;
    std::string citation;

    bool supports(const std::string& verb) const;
    nlohmann::ordered_json to_json() const;
    static ModuleDescriptor from_json(const nlohmann::json& j);
};

ModuleDescriptor define_module(const std::string& name,
                               const std::vector<SlotDecl>& slots,
                               const std::vector<std::string>& verbs,
                               const std::string& version,
                               const std::string& citation = "");

ModuleDescriptor inherit_module(const ModuleDescriptor& parent,
                                const std::string& name,
                                const std::vector<SlotDecl>& slot_overrides,
                                const std::vector<std::string>& extra_verbs);

ModuleDescriptor renew_module(const ModuleDescriptor& d, Bump bump,
                              std::optional<Lifecycle> lifecycle = std::nullopt);

// Single-owner mutable state; all access goes through invoke().
struct ModuleInstance {
    ModuleDescriptor descriptor;
    nlohmann::json state = nlohmann::json::object();
};

// Verb implementations receive the instance state (mutable) and a payload,
// and return the verb output. invoke() applies them all-or-nothing.
using VerbImpl = std::function<nlohmann::json(nlohmann::json& state, const nlohmann::json& payload)>;

// Table-driven dispatch, keyed by (module name, verb). Lookup walks the
// descriptor's parent chain so inherited verbs resolve to parent algorithms.
class VerbRegistry {
public:
    void register_impl(const std::string& module_name, const std::string& verb, VerbImpl impl);

    nlohmann::json invoke(ModuleInstance& instance, const std::string& verb,
                          const nlohmann::json& payload) const;

    // Needed so lookup can walk parent names to their descriptors.
    void register_descriptor(const ModuleDescriptor& d);

private:
    const VerbImpl* find_impl(const std::string& module_name, const std::string& verb) const;

    std::map<std::pair<std::string, std::string>, VerbImpl> impls_;
    std::map<std::string, ModuleDescriptor> descriptors_;
};

} // namespace chem
