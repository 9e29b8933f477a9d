#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chem/dataset.hpp"

namespace chem {

struct NumericStats {
    std::size_t n = 0;
    std::size_t n_missing = 0;
    double mean = 0;
    double sd = 0; // sample sd, n-1 denominator; 0 when n < 2
    double min = 0;
    double max = 0;
    std::vector<double> bin_edges;      // bins + 1 edges
    std::vector<std::size_t> bin_counts;
};

struct LevelCount {
    std::string level;
    std::size_t count = 0;
};

struct CategoricalStats {
    std::size_t n = 0;
    std::size_t n_missing = 0;
    std::vector<LevelCount> levels;
};

struct VariableSummary {
    std::string variable;
    std::optional<NumericStats> numeric;
    std::optional<CategoricalStats> categorical;
    std::size_t n = 0;
    std::size_t n_missing = 0;
};

struct StratumSummary {
    std::optional<std::string> group; // unset = pooled
    std::optional<std::string> round;
    std::size_t n_rows = 0;
    std::vector<VariableSummary> variables;
};

struct DescriptiveSummary {
    std::vector<StratumSummary> strata;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const; // aligned plain-text tables
};

struct StratifyOptions {
    bool by_group = false;
    bool by_round = false;
};

DescriptiveSummary describe_dataset(const ValidatedDataset& ds, StratifyOptions opts = {});

// Histogram bin rule used throughout: min(20, ceil(sqrt(n))).
std::size_t histogram_bin_count(std::size_t n);

} // namespace chem
