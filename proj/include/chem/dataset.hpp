#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chem/dictionary.hpp"
#include "chem/table.hpp"

namespace chem {

struct DatasetMetadata {
    std::string uid_var;
    std::optional<std::string> round_var;
    std::optional<std::string> group_var;
    std::map<std::string, std::string> label_map;
};

// Immutable after construction; produced only by validate_dataset.
struct ValidatedDataset {
    RawTable table;
    DataDictionary dictionary;
    DatasetMetadata metadata;
    std::string validation_stamp; // SHA-256 of (canonical table, dictionary)
};

// Coerces every cell to its dictionary class and checks ranges/sets.
// Collects all violations, then throws a combined ValidationError.
ValidatedDataset validate_dataset(const RawTable& table, const DataDictionary& dictionary,
                                  const DatasetMetadata& metadata);

} // namespace chem
