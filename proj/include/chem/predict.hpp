#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chem/dataset.hpp"
#include "chem/models.hpp"

namespace chem {

struct PredictionRequest {
    FittedModel model;
    const ValidatedDataset* newdata = nullptr;
    std::map<std::string, std::string> variable_map; // coefficient -> column
    double lower_bound = 0.0;                        // instrument utility bounds
    double upper_bound = 1.0;
};

struct CompatibilityReport {
    bool ok = false;
    std::vector<std::string> issues;
};

CompatibilityReport check_compatibility(const FittedModel& model, const ValidatedDataset& newdata,
                                        const std::map<std::string, std::string>& variable_map);

struct PredictionResult {
    std::vector<std::optional<double>> utility; // unset where a predictor is missing
    std::vector<bool> clamped;
    std::size_t clamp_count = 0;
};

PredictionResult predict_utility(const PredictionRequest& request);

struct QalyRecord {
    std::string uid;
    double u_start = 0;
    double u_end = 0;
    double days = 0;
    double qalys = 0;
};

struct QalyResult {
    std::vector<QalyRecord> records;
    std::vector<std::string> skipped; // uids lacking one of the two rounds
};

// Trapezoid rule between two rounds: mean utility x elapsed years (365.25 d).
double trapezoid_qalys(double u_start, double u_end, double days);

QalyResult compute_qalys(const ValidatedDataset& ds, const std::string& utility_var,
                         const std::string& date_var, const std::string& round_start,
                         const std::string& round_end);

} // namespace chem
