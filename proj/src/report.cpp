#include "chem/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "chem/error.hpp"

namespace chem {

namespace {

struct Slot {
    size_t begin = 0; // offset of "{{"
    size_t end = 0;   // offset past "}}"
    std::string key;
    bool is_table = false;
};

std::vector<Slot> scan_slots(const std::string& body) {
    std::vector<Slot> slots;
    size_t pos = 0;
    while ((pos = body.find("{{", pos)) != std::string::npos) {
        size_t close = body.find("}}", pos + 2);
        if (close == std::string::npos) {
            throw Error("malformed template: unterminated '{{' at offset " + std::to_string(pos));
        }
        Slot s;
        s.begin = pos;
        s.end = close + 2;
        std::string inner = body.substr(pos + 2, close - pos - 2);
        if (inner.rfind("#table:", 0) == 0) {
            s.is_table = true;
            s.key = inner.substr(7);
        } else {
            s.key = inner;
        }
        if (s.key.empty() || s.key.find_first_of("{}\n") != std::string::npos) {
            throw Error("malformed template: bad placeholder '" + inner + "'");
        }
        slots.push_back(std::move(s));
        pos = close + 2;
    }
    return slots;
}

std::string scalar_to_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.10g", v.get<double>());
        return buf;
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "NA";
    throw Error("placeholder value must be a scalar");
}

std::string render_table(const nlohmann::json& payload, const std::string& key) {
    if (!payload.is_object() || !payload.contains("columns") || !payload.contains("rows")) {
        throw Error("table '" + key + "' must be {columns, rows}");
    }
    std::ostringstream os;
    const auto& cols = payload.at("columns");
    os << "|";
    for (const auto& c : cols) os << " " << scalar_to_text(c) << " |";
    os << "\n|";
    for (size_t i = 0; i < cols.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : payload.at("rows")) {
        os << "|";
        for (const auto& cell : row) os << " " << scalar_to_text(cell) << " |";
        os << "\n";
    }
    return os.str();
}

} // namespace

ReportTemplate ReportTemplate::parse(const std::string& body) {
    ReportTemplate t;
    t.body = body;
    for (const auto& slot : scan_slots(body)) t.required_keys.insert(slot.key);
    return t;
}

RenderedReport render_template(const ReportTemplate& t, const RenderContext& ctx) {
    if (!ctx.is_object()) throw Error("render context must be a JSON object");

    std::vector<std::string> missing;
    for (const auto& key : t.required_keys) {
        if (!ctx.contains(key)) missing.push_back(key);
    }
    if (!missing.empty()) {
        std::string msg = "missing keys:";
        for (size_t i = 0; i < missing.size(); ++i) msg += (i ? ", " : " ") + missing[i];
        throw Error(msg);
    }

    std::string out;
    size_t last = 0;
    for (const auto& slot : scan_slots(t.body)) {
        out += t.body.substr(last, slot.begin - last);
        out += slot.is_table ? render_table(ctx.at(slot.key), slot.key)
                             : scalar_to_text(ctx.at(slot.key));
        last = slot.end;
    }
    out += t.body.substr(last);

    RenderedReport rr;
    rr.text = std::move(out);
    for (const auto& [key, value] : ctx.items()) {
        if (!t.required_keys.count(key)) rr.unused_keys.push_back(key);
    }
    return rr;
}

} // namespace chem
