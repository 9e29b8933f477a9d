#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chem {

enum class VarClass { integer, real, categorical, date, text };

std::string to_string(VarClass c);
VarClass var_class_from_string(const std::string& s);

struct DictionaryEntry {
    std::string variable;
    VarClass var_class = VarClass::text;
    std::optional<double> min;
    std::optional<double> max;
    std::vector<std::string> allowed_set;
    std::string description;
};

struct DataDictionary {
    std::vector<DictionaryEntry> entries;

    const DictionaryEntry* find(const std::string& variable) const;

    // Canonical CSV form (also the on-disk format); stable for hashing.
    std::string to_csv() const;
};

// Parses the dictionary CSV: variable,class,min,max,allowed_set,description.
// allowed_set is pipe-delimited.
DataDictionary load_dictionary(const std::string& source);

} // namespace chem
