#include "chem/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "chem/error.hpp"
#include "chem/hash.hpp"

namespace chem {

namespace {

std::string fmt_number(double v) {
    char buf[40];
    if (v == static_cast<long long>(v)) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    } else {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
    }
    return buf;
}

std::string range_text(const DictionaryEntry& e) {
    std::string lo = e.min ? fmt_number(*e.min) : "-inf";
    std::string hi = e.max ? fmt_number(*e.max) : "inf";
    return "[" + lo + ", " + hi + "]";
}

std::string set_text(const DictionaryEntry& e) {
    std::string out = "{";
    for (size_t i = 0; i < e.allowed_set.size(); ++i) {
        if (i) out += ", ";
        out += e.allowed_set[i];
    }
    return out + "}";
}

bool parse_int(const std::string& s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(const std::string& s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool valid_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

// Coerces one cell; appends a violation message and returns missing on failure.
Value coerce_cell(const Value& cell, const DictionaryEntry& e, size_t row,
                  std::vector<std::string>& errors) {
    if (is_missing(cell)) return cell;

    auto fail = [&](const std::string& msg) -> Value {
        errors.push_back(e.variable + ": " + msg + " at row " + std::to_string(row));
        return Value{std::monostate{}};
    };

    switch (e.var_class) {
    case VarClass::integer: {
        std::int64_t v = 0;
        if (const auto* i = std::get_if<std::int64_t>(&cell)) {
            v = *i;
        } else if (const auto* s = std::get_if<std::string>(&cell)) {
            if (!parse_int(*s, v)) return fail("value '" + *s + "' is not an integer");
        } else {
            double d = std::get<double>(cell);
            if (d != std::floor(d)) return fail("value " + fmt_number(d) + " is not an integer");
            v = static_cast<std::int64_t>(d);
        }
        if ((e.min && v < *e.min) || (e.max && v > *e.max)) {
            errors.push_back(e.variable + ": value " + std::to_string(v) + " at row " +
                             std::to_string(row) + " outside " + range_text(e));
            return Value{std::monostate{}};
        }
        return Value{v};
    }
    case VarClass::real: {
        double v = 0;
        if (!numeric_value(cell, v)) {
            const auto& s = std::get<std::string>(cell);
            if (!parse_double(s, v)) return fail("value '" + s + "' is not numeric");
        }
        if ((e.min && v < *e.min) || (e.max && v > *e.max)) {
            errors.push_back(e.variable + ": value " + fmt_number(v) + " at row " +
                             std::to_string(row) + " outside " + range_text(e));
            return Value{std::monostate{}};
        }
        return Value{v};
    }
    case VarClass::categorical: {
        std::string s = value_to_text(cell);
        if (std::find(e.allowed_set.begin(), e.allowed_set.end(), s) == e.allowed_set.end()) {
            errors.push_back(e.variable + ": value '" + s + "' at row " + std::to_string(row) +
                             " not in " + set_text(e));
            return Value{std::monostate{}};
        }
        return Value{s};
    }
    case VarClass::date: {
        std::string s = value_to_text(cell);
        if (!valid_iso_date(s)) return fail("value '" + s + "' is not an ISO date (YYYY-MM-DD)");
        return Value{s};
    }
    case VarClass::text:
        return Value{value_to_text(cell)};
    }
    return cell;
}

} // namespace

ValidatedDataset validate_dataset(const RawTable& table, const DataDictionary& dictionary,
                                  const DatasetMetadata& metadata) {
    std::vector<std::string> errors;

    if (!table.has_column(metadata.uid_var)) {
        errors.push_back("uid_var column '" + metadata.uid_var + "' not found");
    }
    if (metadata.round_var && !table.has_column(*metadata.round_var)) {
        errors.push_back("round_var column '" + *metadata.round_var + "' not found");
    }
    if (metadata.group_var && !table.has_column(*metadata.group_var)) {
        errors.push_back("group_var column '" + *metadata.group_var + "' not found");
    }

    RawTable coerced;
    coerced.names = table.names;
    coerced.columns.resize(table.n_cols());
    const size_t n = table.n_rows();

    for (size_t c = 0; c < table.n_cols(); ++c) {
        const DictionaryEntry* entry = dictionary.find(table.names[c]);
        if (!entry) {
            errors.push_back("no dictionary entry for column '" + table.names[c] + "'");
            continue;
        }
        auto& out = coerced.columns[c];
        out.reserve(n);
        for (size_t r = 0; r < n; ++r) {
            out.push_back(coerce_cell(table.columns[c][r], *entry, r + 1, errors));
        }
    }

    if (!errors.empty()) {
        std::ostringstream msg;
        msg << "validation failed with " << errors.size() << " violation"
            << (errors.size() == 1 ? "" : "s") << ":";
        for (const auto& e : errors) msg << "\n  " << e;
        throw ValidationError(msg.str());
    }

    ValidatedDataset ds;
    ds.table = std::move(coerced);
    ds.dictionary = dictionary;
    ds.metadata = metadata;
    ds.validation_stamp = sha256_hex(table_to_csv(ds.table) + dictionary.to_csv());
    return ds;
}

} // namespace chem
