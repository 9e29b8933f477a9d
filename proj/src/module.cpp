#include "chem/module.hpp"

#include <algorithm>
#include <set>

#include "chem/error.hpp"
#include "chem/verbs.hpp"

namespace chem {

bool is_verb(std::string_view name) {
    return std::find(kVerbSet.begin(), kVerbSet.end(), name) != kVerbSet.end();
}

std::string verb_list() {
    std::string out;
    for (auto v : kVerbSet) {
        if (!out.empty()) out += ", ";
        out += v;
    }
    return out;
}

std::string to_string(Lifecycle lc) {
    switch (lc) {
    case Lifecycle::experimental: return "experimental";
    case Lifecycle::stable: return "stable";
    case Lifecycle::deprecated: return "deprecated";
    }
    return "experimental";
}

Lifecycle lifecycle_from_string(const std::string& s) {
    if (s == "experimental") return Lifecycle::experimental;
    if (s == "stable") return Lifecycle::stable;
    if (s == "deprecated") return Lifecycle::deprecated;
    throw Error("unknown lifecycle '" + s + "'");
}

namespace {

// Canonical verb order = VerbSet order; dedupes as it sorts.
std::vector<std::string> normalize_verbs(const std::vector<std::string>& verbs) {
    std::vector<std::string> out;
    for (auto v : kVerbSet) {
        if (std::find(verbs.begin(), verbs.end(), v) != verbs.end()) {
            out.emplace_back(v);
        }
    }
    return out;
}

void check_verbs(const std::vector<std::string>& verbs) {
    for (const auto& v : verbs) {
        if (!is_verb(v)) {
            throw Error("unknown verb '" + v + "'; legal verbs: " + verb_list());
        }
    }
}

void check_slots(const std::vector<SlotDecl>& slots) {
    std::set<std::string> seen;
    for (const auto& s : slots) {
        if (!seen.insert(s.name).second) {
            throw Error("duplicate slot '" + s.name + "'");
        }
    }
}

} // namespace

bool ModuleDescriptor::supports(const std::string& verb) const {
    return std::find(supported_verbs.begin(), supported_verbs.end(), verb) !=
           supported_verbs.end();
}

nlohmann::ordered_json ModuleDescriptor::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["version"] = version.str();
    j["parent"] = parent ? nlohmann::ordered_json(*parent) : nlohmann::ordered_json(nullptr);
    auto slots_j = nlohmann::ordered_json::array();
    for (const auto& s : slots) {
        slots_j.push_back({{"name", s.name},
                           {"type", s.type},
                           {"kind", s.kind == SlotKind::data ? "data" : "parameter"}});
    }
    j["slots"] = slots_j;
    j["supported_verbs"] = supported_verbs;
    j["lifecycle"] = to_string(lifecycle);
    j["citation"] = citation;
    return j;
}

ModuleDescriptor ModuleDescriptor::from_json(const nlohmann::json& j) {
    ModuleDescriptor d;
    d.name = j.at("name").get<std::string>();
    d.version = SemVer::parse(j.at("version").get<std::string>());
    if (j.contains("parent") && !j.at("parent").is_null()) {
        d.parent = j.at("parent").get<std::string>();
    }
    for (const auto& s : j.at("slots")) {
        d.slots.push_back({s.at("name").get<std::string>(),
                           s.at("type").get<std::string>(),
                           s.at("kind").get<std::string>() == "data" ? SlotKind::data
                                                                     : SlotKind::parameter});
    }
    d.supported_verbs = j.at("supported_verbs").get<std::vector<std::string>>();
    check_verbs(d.supported_verbs);
    d.lifecycle = lifecycle_from_string(j.at("lifecycle").get<std::string>());
    d.citation = j.value("citation", "");
    return d;
}

ModuleDescriptor define_module(const std::string& name,
                               const std::vector<SlotDecl>& slots,
                               const std::vector<std::string>& verbs,
                               const std::string& version,
                               const std::string& citation) {
    if (name.empty()) throw Error("module name must be nonempty");
    check_verbs(verbs);
    check_slots(slots);
    ModuleDescriptor d;
    d.name = name;
    d.version = SemVer::parse(version);
    d.slots = slots;
    d.supported_verbs = normalize_verbs(verbs);
    d.lifecycle = Lifecycle::experimental;
    d.citation = citation;
    return d;
}

ModuleDescriptor inherit_module(const ModuleDescriptor& parent,
                                const std::string& name,
                                const std::vector<SlotDecl>& slot_overrides,
                                const std::vector<std::string>& extra_verbs) {
    if (parent.lifecycle == Lifecycle::deprecated) {
        throw Error("parent '" + parent.name + "' is deprecated");
    }
    if (name.empty()) throw Error("module name must be nonempty");
    check_verbs(extra_verbs);
    check_slots(slot_overrides);

    ModuleDescriptor child;
    child.name = name;
    child.version = SemVer{0, 1, 0};
    child.parent = parent.name;
    child.citation = parent.citation;
    child.lifecycle = Lifecycle::experimental;

    // Parent slots first, overridden in place where names collide.
    child.slots = parent.slots;
    for (const auto& ov : slot_overrides) {
        auto it = std::find_if(child.slots.begin(), child.slots.end(),
                               [&](const SlotDecl& s) { return s.name == ov.name; });
        if (it != child.slots.end()) *it = ov;
        else child.slots.push_back(ov);
    }

    auto verbs = parent.supported_verbs;
    verbs.insert(verbs.end(), extra_verbs.begin(), extra_verbs.end());
    child.supported_verbs = normalize_verbs(verbs);
    return child;
}

ModuleDescriptor renew_module(const ModuleDescriptor& d, Bump bump,
                              std::optional<Lifecycle> lifecycle) {
    ModuleDescriptor out = d;
    out.version = d.version.bumped(bump);
    if (lifecycle) {
        if (d.lifecycle == Lifecycle::deprecated && *lifecycle != Lifecycle::deprecated) {
            throw Error("module '" + d.name + "': cannot un-deprecate");
        }
        out.lifecycle = *lifecycle;
    }
    return out;
}

void VerbRegistry::register_impl(const std::string& module_name, const std::string& verb,
                                 VerbImpl impl) {
    if (!is_verb(verb)) {
        throw Error("unknown verb '" + verb + "'; legal verbs: " + verb_list());
    }
    impls_[{module_name, verb}] = std::move(impl);
}

void VerbRegistry::register_descriptor(const ModuleDescriptor& d) {
    descriptors_[d.name] = d;
}

const VerbImpl* VerbRegistry::find_impl(const std::string& module_name,
                                        const std::string& verb) const {
    std::string current = module_name;
    while (true) {
        auto it = impls_.find({current, verb});
        if (it != impls_.end()) return &it->second;
        auto dit = descriptors_.find(current);
        if (dit == descriptors_.end() || !dit->second.parent) return nullptr;
        current = *dit->second.parent;
    }
}

nlohmann::json VerbRegistry::invoke(ModuleInstance& instance, const std::string& verb,
                                    const nlohmann::json& payload) const {
    const auto& d = instance.descriptor;
    if (!d.supports(verb)) {
        std::string supported;
        for (const auto& v : d.supported_verbs) {
            if (!supported.empty()) supported += ", ";
            supported += v;
        }
        throw Error("module '" + d.name + "' supports: " + supported);
    }
    const VerbImpl* impl = find_impl(d.name, verb);
    if (!impl) {
        throw Error("module '" + d.name + "': no implementation registered for verb '" +
                    verb + "'");
    }
    // All-or-nothing state update: run on a copy, commit only on success.
    nlohmann::json staged = instance.state;
    try {
        nlohmann::json out = (*impl)(staged, payload);
        instance.state = std::move(staged);
        return out;
    } catch (const std::exception& e) {
        throw Error(d.name + "." + verb + ": " + e.what());
    }
}

} // namespace chem
