#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chem/dataset.hpp"

namespace chem {

struct InstrumentItem {
    std::string item_id;
    std::string variable;
    int levels = 0;
};

struct InstrumentDomain {
    std::string domain_id;
    std::vector<std::string> item_ids;
};

enum class ScoringEngine { additive_decrement, multiplicative_domain, custom };

struct InstrumentDefinition {
    std::string name;
    std::string version;
    std::string country;
    std::vector<InstrumentItem> items;
    std::vector<InstrumentDomain> domains;
    ScoringEngine engine = ScoringEngine::additive_decrement;

    // additive_decrement: items x levels matrix, column 1 all zero
    std::vector<std::vector<double>> decrements;

    // multiplicative_domain: per-item level disutility weights in [0,1],
    // per-domain combination weights, global scale
    std::vector<std::vector<double>> item_weights;
    std::vector<double> domain_weights;
    double scale = 1.0;

    // custom: name of a registered scorer
    std::string custom_scorer;

    std::array<double, 2> utility_bounds{0.0, 1.0};

    int item_index(const std::string& item_id) const; // -1 if absent

    static InstrumentDefinition from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

InstrumentDefinition load_instrument(const std::string& json_text);

// Custom scorers must satisfy the anchor law (all-best state scores 1.0)
// and stay within the instrument bounds; violations are runtime errors.
using CustomScorer = std::function<double(const std::vector<int>& state)>;
void register_custom_scorer(const std::string& name, CustomScorer fn);

// utility = anchor - sum of per-item decrements at the observed levels.
double score_additive(const std::vector<int>& state,
                      const std::vector<std::vector<double>>& decrements,
                      double anchor = 1.0);

// Domain disutility 1 - prod(1 - w_item), combined 1 - prod(1 - k_d * d_d),
// utility = 1 - scale * combined, clamped to the instrument bounds.
double score_multiplicative(const std::vector<int>& state, const InstrumentDefinition& def,
                            bool* clamped = nullptr);

struct InstrumentBinding {
    ValidatedDataset dataset;
    InstrumentDefinition instrument;
    std::vector<int> item_columns; // parallel to instrument.items
};

InstrumentBinding attach_instrument(const ValidatedDataset& ds,
                                    const InstrumentDefinition& inst);

struct ScoredDataset {
    ValidatedDataset base;
    InstrumentDefinition instrument;
    std::vector<std::vector<Value>> item_scores;               // per item, [0,1]
    std::vector<std::vector<Value>> domain_scores_unweighted;  // per domain
    std::vector<std::vector<Value>> domain_scores_weighted;    // per domain
    std::vector<Value> total_unweighted;
    std::vector<Value> total_utility;
    std::size_t clamp_count = 0;

    // Base table plus score columns, with a dictionary extended to cover them;
    // lets describe_dataset produce per-domain and total histograms.
    ValidatedDataset as_validated(bool weighted = true) const;
};

ScoredDataset score_dataset(const InstrumentBinding& binding, bool weighted = true);

} // namespace chem
