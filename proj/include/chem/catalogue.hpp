#pragma once

#include <string>
#include <vector>

#include "chem/crossval.hpp"

namespace chem {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Record-free, shareable bundle of fitted models plus performance metadata.
struct ModelCatalogue {
    std::string toolkit_version = kToolkitVersion;
    std::string dataset_fingerprint;
    std::string instrument;
    std::string created_utc;
    std::string identifier;
    std::vector<EvaluatedModel> models;
};

ModelCatalogue build_catalogue(const std::vector<EvaluatedModel>& models,
                               const std::string& dataset_fingerprint,
                               const std::string& instrument,
                               const std::string& created_utc,
                               const std::string& identifier = "");

// Fixed key order, doubles at 17 significant digits; round-trips losslessly.
std::string catalogue_to_json(const ModelCatalogue& cat);
ModelCatalogue catalogue_from_json(const std::string& text);

// CSV columns: family,predictors,covariates,r2_cv,rmse_cv,mae_cv,r2_in,rmse_in,mae_in
std::string performance_csv(const ModelCatalogue& cat);

std::string current_utc_timestamp();

} // namespace chem
