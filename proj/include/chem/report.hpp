#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace chem {

// Minimal template language: {{key}} substitution and {{#table:name}} blocks.
// No logic in templates; anything conditional belongs in manifest steps.
struct ReportTemplate {
    std::string body;
    std::set<std::string> required_keys; // derived from the body, not declared

    static ReportTemplate parse(const std::string& body);
};

// Values are text/number JSON scalars; tables are
// {"columns": [...], "rows": [[...], ...]} payloads.
using RenderContext = nlohmann::json;

struct RenderedReport {
    std::string text;
    std::vector<std::string> unused_keys; // supplied but not referenced
};

RenderedReport render_template(const ReportTemplate& t, const RenderContext& ctx);

} // namespace chem
