#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chem/dataset.hpp"
#include "chem/metrics.hpp"
#include "chem/models.hpp"

namespace chem {

struct CandidateSpec {
    std::string target;
    std::vector<std::string> predictors;
    std::vector<std::string> covariates;
    std::vector<ModelFamily> families;
    int folds = 5;
    std::uint64_t seed = 0;
    std::string cluster_var; // required by lmm families; defaults to uid_var
};

CandidateSpec specify_candidates(const ValidatedDataset& ds, const std::string& target,
                                 const std::vector<std::string>& predictors,
                                 const std::vector<std::string>& covariates,
                                 const std::vector<ModelFamily>& families, int folds,
                                 std::uint64_t seed, const std::string& cluster_var = "");

// Seeded balanced partition: fold sizes differ by at most one.
std::vector<int> assign_folds(std::size_t n, int k, std::uint64_t seed);

// Clusters are assigned whole, so no cluster straddles folds.
std::vector<int> assign_folds_by_cluster(const std::vector<std::string>& cluster, int k,
                                         std::uint64_t seed);

struct PerformanceRecord {
    ModelFamily family;
    std::vector<std::string> predictors;
    std::vector<std::string> covariates;
    std::optional<double> r2_in;
    double rmse_in = 0;
    double mae_in = 0;
    std::optional<double> r2_cv; // mean of per-fold R2, unset if any fold undefined
    double rmse_cv = 0;
    double mae_cv = 0;
    std::vector<double> fold_rmse;
    std::vector<double> fold_mae;
    std::vector<double> fold_r2; // NaN where undefined
};

struct EvaluatedModel {
    FittedModel model; // fitted on all complete rows
    PerformanceRecord performance;
};

// Default grid: every family x (each single predictor) x (all covariates).
// Records are sorted by CV RMSE ascending; ties keep declared family order.
std::vector<EvaluatedModel> cross_validate(const ValidatedDataset& ds,
                                           const CandidateSpec& spec);

} // namespace chem
