#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chem/dataset.hpp"

namespace chem {

struct Metrics {
    std::optional<double> r2; // unset when observed is constant
    double rmse = 0;
    double mae = 0;
};

Metrics compute_metrics(const std::vector<double>& observed,
                        const std::vector<double>& predicted);

// Pearson correlations over pairwise-complete observations. Correlations
// involving a constant variable are NaN (undefined), never 0; diagonal is 1.
struct CorrelationMatrix {
    std::vector<std::string> variables;
    std::vector<std::vector<double>> values;
};

CorrelationMatrix correlation_matrix(const ValidatedDataset& ds,
                                     const std::vector<std::string>& vars);

} // namespace chem
