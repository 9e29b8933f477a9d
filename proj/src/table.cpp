#include "chem/table.hpp"

#include <algorithm>
#include <cstdio>

#include "chem/csv.hpp"
#include "chem/error.hpp"

namespace chem {

bool numeric_value(const Value& v, double& out) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
        out = static_cast<double>(*i);
        return true;
    }
    if (const auto* d = std::get_if<double>(&v)) {
        out = *d;
        return true;
    }
    return false;
}

std::string value_to_text(const Value& v, const std::string& missing_marker) {
    if (is_missing(v)) return missing_marker;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", *d);
        return buf;
    }
    return std::get<std::string>(v);
}

bool RawTable::has_column(const std::string& name) const {
    return column_index(name) >= 0;
}

int RawTable::column_index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return -1;
    return static_cast<int>(it - names.begin());
}

const std::vector<Value>& RawTable::column(const std::string& name) const {
    int idx = column_index(name);
    if (idx < 0) throw Error("no column '" + name + "'");
    return columns[static_cast<size_t>(idx)];
}

std::vector<Value>& RawTable::column(const std::string& name) {
    int idx = column_index(name);
    if (idx < 0) throw Error("no column '" + name + "'");
    return columns[static_cast<size_t>(idx)];
}

RawTable ingest_table(const std::string& source, const std::string& missing_marker) {
    auto rows = parse_csv(source);
    if (rows.empty()) throw Error("empty input: header row required");

    RawTable table;
    table.names = rows.front();
    const size_t width = table.names.size();
    table.columns.assign(width, {});

    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != width) {
            throw Error("line " + std::to_string(r + 1) + ": expected " +
                        std::to_string(width) + " fields, got " + std::to_string(row.size()));
        }
        for (size_t c = 0; c < width; ++c) {
            if (row[c] == missing_marker) {
                table.columns[c].emplace_back(std::monostate{});
            } else {
                table.columns[c].emplace_back(row[c]);
            }
        }
    }
    return table;
}

std::string table_to_csv(const RawTable& table, const std::string& missing_marker) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back(table.names);
    const size_t n = table.n_rows();
    for (size_t r = 0; r < n; ++r) {
        std::vector<std::string> row;
        row.reserve(table.n_cols());
        for (size_t c = 0; c < table.n_cols(); ++c) {
            row.push_back(value_to_text(table.columns[c][r], missing_marker));
        }
        rows.push_back(std::move(row));
    }
    return write_csv(rows);
}

} // namespace chem
