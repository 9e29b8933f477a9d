#pragma once

#include <array>
#include <string>
#include <string_view>

namespace chem {

// The fixed command vocabulary. Every public operation in the toolkit is
// labelled with exactly one of these verbs; the set is frozen across releases.
inline constexpr std::array<std::string_view, 15> kVerbSet = {
    "ingest",  "validate", "describe", "depict",  "transform",
    "score",   "specify",  "evaluate", "select",  "predict",
    "report",  "export",   "share",    "renew",   "search",
};

bool is_verb(std::string_view name);

// Comma-joined list of the 15 legal verbs, for error messages.
std::string verb_list();

} // namespace chem
