#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace chem {

// A cell: missing, integer, double, or text. Dates are held as ISO text.
using Value = std::variant<std::monostate, std::int64_t, double, std::string>;

inline bool is_missing(const Value& v) { return std::holds_alternative<std::monostate>(v); }

// Numeric view of a cell; missing/text yield no value.
bool numeric_value(const Value& v, double& out);

std::string value_to_text(const Value& v, const std::string& missing_marker = "NA");

struct RawTable {
    std::vector<std::string> names;
    std::vector<std::vector<Value>> columns; // parallel to names, uniform length

    std::size_t n_rows() const { return columns.empty() ? 0 : columns.front().size(); }
    std::size_t n_cols() const { return names.size(); }

    bool has_column(const std::string& name) const;
    const std::vector<Value>& column(const std::string& name) const;
    std::vector<Value>& column(const std::string& name);
    int column_index(const std::string& name) const; // -1 if absent
};

// Parses delimited text (header row required) into an all-text table;
// cells equal to missing_marker become missing values.
RawTable ingest_table(const std::string& source, const std::string& missing_marker = "NA");

// Canonical CSV rendering; used for content hashing and file export.
std::string table_to_csv(const RawTable& table, const std::string& missing_marker = "NA");

} // namespace chem
