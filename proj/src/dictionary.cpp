#include "chem/dictionary.hpp"

#include <charconv>
#include <cstdio>
#include <set>

#include "chem/csv.hpp"
#include "chem/error.hpp"

namespace chem {

std::string to_string(VarClass c) {
    switch (c) {
    case VarClass::integer: return "integer";
    case VarClass::real: return "double";
    case VarClass::categorical: return "categorical";
    case VarClass::date: return "date";
    case VarClass::text: return "text";
    }
    return "text";
}

VarClass var_class_from_string(const std::string& s) {
    if (s == "integer") return VarClass::integer;
    if (s == "double") return VarClass::real;
    if (s == "categorical") return VarClass::categorical;
    if (s == "date") return VarClass::date;
    if (s == "text") return VarClass::text;
    throw Error("unknown variable class '" + s +
                "' (expected integer, double, categorical, date, or text)");
}

const DictionaryEntry* DataDictionary::find(const std::string& variable) const {
    for (const auto& e : entries) {
        if (e.variable == variable) return &e;
    }
    return nullptr;
}

namespace {

std::optional<double> parse_bound(const std::string& field, const std::string& variable,
                                  size_t line) {
    if (field.empty()) return std::nullopt;
    double v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error("line " + std::to_string(line) + ": " + variable +
                    ": malformed bound '" + field + "'");
    }
    return v;
}

std::vector<std::string> split_pipe(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t pos = s.find('|', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string format_bound(const std::optional<double>& b) {
    if (!b) return "";
    char buf[40];
    if (*b == static_cast<long long>(*b)) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(*b));
    } else {
        std::snprintf(buf, sizeof(buf), "%.17g", *b);
    }
    return buf;
}

} // namespace

DataDictionary load_dictionary(const std::string& source) {
    auto rows = parse_csv(source);
    if (rows.empty()) throw Error("empty dictionary: header row required");

    DataDictionary dict;
    std::set<std::string> seen;
    for (size_t r = 1; r < rows.size(); ++r) {
        const size_t line = r + 1;
        const auto& row = rows[r];
        if (row.size() != 6) {
            throw Error("line " + std::to_string(line) + ": expected 6 fields "
                        "(variable,class,min,max,allowed_set,description), got " +
                        std::to_string(row.size()));
        }
        DictionaryEntry e;
        e.variable = row[0];
        if (e.variable.empty()) {
            throw Error("line " + std::to_string(line) + ": empty variable name");
        }
        if (!seen.insert(e.variable).second) {
            throw Error("line " + std::to_string(line) + ": duplicate variable '" +
                        e.variable + "'");
        }
        try {
            e.var_class = var_class_from_string(row[1]);
        } catch (const Error& err) {
            throw Error("line " + std::to_string(line) + ": " + err.what());
        }
        e.min = parse_bound(row[2], e.variable, line);
        e.max = parse_bound(row[3], e.variable, line);
        if (!row[4].empty()) e.allowed_set = split_pipe(row[4]);
        e.description = row[5];

        const bool numeric = e.var_class == VarClass::integer || e.var_class == VarClass::real;
        if (numeric) {
            if (e.min && e.max && *e.min > *e.max) {
                throw Error(e.variable + ": min " + format_bound(e.min) + " > max " +
                            format_bound(e.max));
            }
            if (!e.allowed_set.empty()) {
                throw Error(e.variable + ": allowed_set not permitted for numeric class");
            }
        } else if (e.var_class == VarClass::categorical) {
            if (e.allowed_set.empty()) {
                throw Error(e.variable + ": categorical variable requires an allowed_set");
            }
            if (e.min || e.max) {
                throw Error(e.variable + ": min/max not permitted for categorical class");
            }
        }
        dict.entries.push_back(std::move(e));
    }
    return dict;
}

std::string DataDictionary::to_csv() const {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"variable", "class", "min", "max", "allowed_set", "description"});
    for (const auto& e : entries) {
        std::string allowed;
        for (size_t i = 0; i < e.allowed_set.size(); ++i) {
            if (i) allowed += "|";
            allowed += e.allowed_set[i];
        }
        rows.push_back({e.variable, to_string(e.var_class), format_bound(e.min),
                        format_bound(e.max), allowed, e.description});
    }
    return write_csv(rows);
}

} // namespace chem
