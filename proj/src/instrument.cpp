#include "chem/instrument.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "chem/error.hpp"

namespace chem {

namespace {

std::map<std::string, CustomScorer>& custom_scorers() {
    static std::map<std::string, CustomScorer> scorers;
    return scorers;
}

std::string engine_name(ScoringEngine e) {
    switch (e) {
    case ScoringEngine::additive_decrement: return "additive_decrement";
    case ScoringEngine::multiplicative_domain: return "multiplicative_domain";
    case ScoringEngine::custom: return "custom";
    }
    return "custom";
}

ScoringEngine engine_from_string(const std::string& s) {
    if (s == "additive_decrement") return ScoringEngine::additive_decrement;
    if (s == "multiplicative_domain") return ScoringEngine::multiplicative_domain;
    if (s == "custom") return ScoringEngine::custom;
    throw Error("unknown scoring engine '" + s + "'");
}

void check_definition(const InstrumentDefinition& def) {
    if (def.items.empty()) throw Error(def.name + ": instrument has no items");
    if (def.utility_bounds[1] != 1.0) {
        throw Error(def.name + ": upper utility bound must be 1.0 (full-health anchor)");
    }
    if (def.utility_bounds[0] >= def.utility_bounds[1]) {
        throw Error(def.name + ": lower utility bound must be below upper");
    }
    std::set<std::string> assigned;
    for (const auto& d : def.domains) {
        if (d.item_ids.empty()) throw Error(def.name + ": domain '" + d.domain_id + "' is empty");
        for (const auto& id : d.item_ids) {
            if (def.item_index(id) < 0) {
                throw Error(def.name + ": domain '" + d.domain_id + "' references unknown item '" +
                            id + "'");
            }
            if (!assigned.insert(id).second) {
                throw Error(def.name + ": item '" + id + "' belongs to more than one domain");
            }
        }
    }
    for (const auto& it : def.items) {
        if (it.levels < 2) throw Error(def.name + ": item '" + it.item_id + "' needs >= 2 levels");
        if (!assigned.count(it.item_id)) {
            throw Error(def.name + ": item '" + it.item_id + "' belongs to no domain");
        }
    }

    if (def.engine == ScoringEngine::additive_decrement) {
        if (def.decrements.size() != def.items.size()) {
            throw Error(def.name + ": decrement matrix must have one row per item");
        }
        for (size_t i = 0; i < def.items.size(); ++i) {
            if (def.decrements[i].size() != static_cast<size_t>(def.items[i].levels)) {
                throw Error(def.name + ": item '" + def.items[i].item_id + "': expected " +
                            std::to_string(def.items[i].levels) + " decrements, got " +
                            std::to_string(def.decrements[i].size()));
            }
            if (def.decrements[i][0] != 0.0) {
                throw Error(def.name + ": item '" + def.items[i].item_id +
                            "': decrement at level 1 must be 0");
            }
        }
    } else if (def.engine == ScoringEngine::multiplicative_domain) {
        if (def.item_weights.size() != def.items.size()) {
            throw Error(def.name + ": item_weights must have one row per item");
        }
        for (size_t i = 0; i < def.items.size(); ++i) {
            if (def.item_weights[i].size() != static_cast<size_t>(def.items[i].levels)) {
                throw Error(def.name + ": item '" + def.items[i].item_id + "': expected " +
                            std::to_string(def.items[i].levels) + " weights, got " +
                            std::to_string(def.item_weights[i].size()));
            }
            for (double w : def.item_weights[i]) {
                if (w < 0.0 || w > 1.0) {
                    throw Error(def.name + ": item '" + def.items[i].item_id + "': weight " +
                                std::to_string(w) + " outside [0,1]");
                }
            }
        }
        if (def.domain_weights.size() != def.domains.size()) {
            throw Error(def.name + ": domain_weights must have one entry per domain");
        }
    } else {
        if (def.custom_scorer.empty()) {
            throw Error(def.name + ": custom engine requires params.scorer");
        }
    }
}

} // namespace

int InstrumentDefinition::item_index(const std::string& item_id) const {
    for (size_t i = 0; i < items.size(); ++i) {
        if (items[i].item_id == item_id) return static_cast<int>(i);
    }
    return -1;
}

InstrumentDefinition InstrumentDefinition::from_json(const nlohmann::json& j) {
    InstrumentDefinition def;
    def.name = j.at("name").get<std::string>();
    def.version = j.value("version", "");
    def.country = j.value("country", "");
    for (const auto& it : j.at("items")) {
        def.items.push_back({it.at("item_id").get<std::string>(),
                             it.at("variable").get<std::string>(),
                             it.at("levels").get<int>()});
    }
    for (const auto& d : j.at("domains")) {
        def.domains.push_back({d.at("domain_id").get<std::string>(),
                               d.at("item_ids").get<std::vector<std::string>>()});
    }
    def.engine = engine_from_string(j.at("engine").get<std::string>());
    const auto& params = j.at("params");
    if (def.engine == ScoringEngine::additive_decrement) {
        def.decrements = params.at("decrements").get<std::vector<std::vector<double>>>();
    } else if (def.engine == ScoringEngine::multiplicative_domain) {
        def.item_weights = params.at("item_weights").get<std::vector<std::vector<double>>>();
        def.domain_weights = params.at("domain_weights").get<std::vector<double>>();
        def.scale = params.value("scale", 1.0);
    } else {
        def.custom_scorer = params.value("scorer", "");
    }
    auto bounds = j.at("utility_bounds").get<std::vector<double>>();
    if (bounds.size() != 2) throw Error(def.name + ": utility_bounds must be [lower, upper]");
    def.utility_bounds = {bounds[0], bounds[1]};
    check_definition(def);
    return def;
}

nlohmann::ordered_json InstrumentDefinition::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["version"] = version;
    j["country"] = country;
    auto items_j = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        items_j.push_back(
            {{"item_id", it.item_id}, {"variable", it.variable}, {"levels", it.levels}});
    }
    j["items"] = items_j;
    auto domains_j = nlohmann::ordered_json::array();
    for (const auto& d : domains) {
        domains_j.push_back({{"domain_id", d.domain_id}, {"item_ids", d.item_ids}});
    }
    j["domains"] = domains_j;
    j["engine"] = engine_name(engine);
    nlohmann::ordered_json params;
    if (engine == ScoringEngine::additive_decrement) {
        params["decrements"] = decrements;
    } else if (engine == ScoringEngine::multiplicative_domain) {
        params["item_weights"] = item_weights;
        params["domain_weights"] = domain_weights;
        params["scale"] = scale;
    } else {
        params["scorer"] = custom_scorer;
    }
    j["params"] = params;
    j["utility_bounds"] = {utility_bounds[0], utility_bounds[1]};
    return j;
}

InstrumentDefinition load_instrument(const std::string& json_text) {
    return InstrumentDefinition::from_json(nlohmann::json::parse(json_text));
}

void register_custom_scorer(const std::string& name, CustomScorer fn) {
    custom_scorers()[name] = std::move(fn);
}

double score_additive(const std::vector<int>& state,
                      const std::vector<std::vector<double>>& decrements, double anchor) {
    if (state.size() != decrements.size()) {
        throw Error("state has " + std::to_string(state.size()) + " items, expected " +
                    std::to_string(decrements.size()));
    }
    double utility = anchor;
    for (size_t i = 0; i < state.size(); ++i) {
        const int level = state[i];
        if (level < 1 || static_cast<size_t>(level) > decrements[i].size()) {
            throw Error("item " + std::to_string(i + 1) + ": level " + std::to_string(level) +
                        " outside [1, " + std::to_string(decrements[i].size()) + "]");
        }
        utility -= decrements[i][static_cast<size_t>(level - 1)];
    }
    return utility;
}

double score_multiplicative(const std::vector<int>& state, const InstrumentDefinition& def,
                            bool* clamped) {
    if (state.size() != def.items.size()) {
        throw Error("state has " + std::to_string(state.size()) + " items, expected " +
                    std::to_string(def.items.size()));
    }
    for (size_t i = 0; i < state.size(); ++i) {
        if (state[i] < 1 || state[i] > def.items[i].levels) {
            throw Error("item " + def.items[i].item_id + ": level " + std::to_string(state[i]) +
                        " outside [1, " + std::to_string(def.items[i].levels) + "]");
        }
    }
    double survive = 1.0; // prod over domains of (1 - k_d * domain disutility)
    for (size_t d = 0; d < def.domains.size(); ++d) {
        double keep = 1.0;
        for (const auto& id : def.domains[d].item_ids) {
            int idx = def.item_index(id);
            double w = def.item_weights[static_cast<size_t>(idx)]
                                       [static_cast<size_t>(state[static_cast<size_t>(idx)] - 1)];
            keep *= 1.0 - w;
        }
        double domain_disutility = 1.0 - keep;
        survive *= 1.0 - def.domain_weights[d] * domain_disutility;
    }
    double utility = 1.0 - def.scale * (1.0 - survive);
    if (clamped) *clamped = false;
    if (utility < def.utility_bounds[0]) {
        utility = def.utility_bounds[0];
        if (clamped) *clamped = true;
    } else if (utility > def.utility_bounds[1]) {
        utility = def.utility_bounds[1];
        if (clamped) *clamped = true;
    }
    return utility;
}

InstrumentBinding attach_instrument(const ValidatedDataset& ds,
                                    const InstrumentDefinition& inst) {
    InstrumentBinding binding{ds, inst, {}};
    for (const auto& item : inst.items) {
        int col = ds.table.column_index(item.variable);
        if (col < 0) {
            throw Error("item " + item.item_id + ": column '" + item.variable + "' not found");
        }
        const DictionaryEntry* e = ds.dictionary.find(item.variable);
        if (!e || e->var_class != VarClass::integer) {
            throw Error("item " + item.item_id + ": column '" + item.variable +
                        "' must be integer-classed");
        }
        double lo = e->min.value_or(-1e300);
        double hi = e->max.value_or(1e300);
        if (lo < 1.0 || hi > item.levels) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "item %s: dictionary range [%g,%g] exceeds item levels %d",
                          item.item_id.c_str(), lo, hi, item.levels);
            throw Error(buf);
        }
        binding.item_columns.push_back(col);
    }
    return binding;
}

ScoredDataset score_dataset(const InstrumentBinding& binding, bool /*weighted*/) {
    const auto& def = binding.instrument;
    const auto& table = binding.dataset.table;
    const size_t n = table.n_rows();
    const size_t n_items = def.items.size();
    const size_t n_domains = def.domains.size();

    CustomScorer custom;
    if (def.engine == ScoringEngine::custom) {
        auto it = custom_scorers().find(def.custom_scorer);
        if (it == custom_scorers().end()) {
            throw Error(def.name + ": no custom scorer registered under '" + def.custom_scorer +
                        "'");
        }
        custom = it->second;
        // Anchor law is part of the custom-engine contract.
        std::vector<int> best(n_items, 1);
        double u = custom(best);
        if (std::abs(u - 1.0) > 1e-12) {
            throw Error(def.name + ": custom scorer violates the anchor law (all-best state "
                        "scored " + std::to_string(u) + ", expected 1.0)");
        }
    }

    ScoredDataset out;
    out.base = binding.dataset;
    out.instrument = def;
    out.item_scores.assign(n_items, std::vector<Value>(n, Value{std::monostate{}}));
    out.domain_scores_unweighted.assign(n_domains, std::vector<Value>(n, Value{std::monostate{}}));
    out.domain_scores_weighted.assign(n_domains, std::vector<Value>(n, Value{std::monostate{}}));
    out.total_unweighted.assign(n, Value{std::monostate{}});
    out.total_utility.assign(n, Value{std::monostate{}});

    for (size_t r = 0; r < n; ++r) {
        std::vector<int> state(n_items);
        bool complete = true;
        for (size_t i = 0; i < n_items; ++i) {
            const Value& cell = table.columns[static_cast<size_t>(binding.item_columns[i])][r];
            double v;
            if (!numeric_value(cell, v)) {
                complete = false;
                continue;
            }
            state[i] = static_cast<int>(v);
            // item score rescaled so best level -> 1, worst -> 0
            out.item_scores[i][r] =
                1.0 - (v - 1.0) / static_cast<double>(def.items[i].levels - 1);
        }
        if (!complete) continue; // missing item => missing domain/total scores

        for (size_t d = 0; d < n_domains; ++d) {
            double acc = 0;
            for (const auto& id : def.domains[d].item_ids) {
                int idx = def.item_index(id);
                acc += std::get<double>(out.item_scores[static_cast<size_t>(idx)][r]);
            }
            out.domain_scores_unweighted[d][r] =
                acc / static_cast<double>(def.domains[d].item_ids.size());
        }

        double utility = 0;
        bool clamped = false;
        switch (def.engine) {
        case ScoringEngine::additive_decrement: {
            utility = score_additive(state, def.decrements, 1.0);
            for (size_t d = 0; d < n_domains; ++d) {
                double dec = 0;
                for (const auto& id : def.domains[d].item_ids) {
                    int idx = def.item_index(id);
                    dec += def.decrements[static_cast<size_t>(idx)]
                                         [static_cast<size_t>(state[static_cast<size_t>(idx)] - 1)];
                }
                out.domain_scores_weighted[d][r] = 1.0 - dec;
            }
            break;
        }
        case ScoringEngine::multiplicative_domain: {
            utility = score_multiplicative(state, def, &clamped);
            for (size_t d = 0; d < n_domains; ++d) {
                double keep = 1.0;
                for (const auto& id : def.domains[d].item_ids) {
                    int idx = def.item_index(id);
                    keep *= 1.0 - def.item_weights[static_cast<size_t>(idx)]
                                                  [static_cast<size_t>(
                                                      state[static_cast<size_t>(idx)] - 1)];
                }
                out.domain_scores_weighted[d][r] = keep; // 1 - domain disutility
            }
            break;
        }
        case ScoringEngine::custom: {
            utility = custom(state);
            if (utility < def.utility_bounds[0] - 1e-12 ||
                utility > def.utility_bounds[1] + 1e-12) {
                throw Error(def.name + ": custom scorer violates the bounds law at row " +
                            std::to_string(r + 1) + " (utility " + std::to_string(utility) + ")");
            }
            for (size_t d = 0; d < n_domains; ++d) {
                out.domain_scores_weighted[d][r] = out.domain_scores_unweighted[d][r];
            }
            break;
        }
        }
        if (utility < def.utility_bounds[0]) {
            utility = def.utility_bounds[0];
            clamped = true;
        } else if (utility > def.utility_bounds[1]) {
            utility = def.utility_bounds[1];
            clamped = true;
        }
        if (clamped) ++out.clamp_count;
        out.total_utility[r] = utility;

        double mean_item = 0;
        for (size_t i = 0; i < n_items; ++i) {
            mean_item += std::get<double>(out.item_scores[i][r]);
        }
        out.total_unweighted[r] = mean_item / static_cast<double>(n_items);
    }
    return out;
}

ValidatedDataset ScoredDataset::as_validated(bool /*weighted*/) const {
    RawTable table = base.table;
    DataDictionary dict = base.dictionary;

    auto add_column = [&](const std::string& name, const std::vector<Value>& col, double lo,
                          double hi, const std::string& desc) {
        table.names.push_back(name);
        table.columns.push_back(col);
        dict.entries.push_back({name, VarClass::real, lo, hi, {}, desc});
    };

    for (size_t i = 0; i < instrument.items.size(); ++i) {
        add_column("item_" + instrument.items[i].item_id, item_scores[i], 0.0, 1.0,
                   "Rescaled item score for " + instrument.items[i].item_id);
    }
    for (size_t d = 0; d < instrument.domains.size(); ++d) {
        add_column("domain_" + instrument.domains[d].domain_id + "_unweighted",
                   domain_scores_unweighted[d], 0.0, 1.0,
                   "Unweighted domain score for " + instrument.domains[d].domain_id);
        add_column("domain_" + instrument.domains[d].domain_id + "_weighted",
                   domain_scores_weighted[d], 0.0, 1.0,
                   "Weighted domain score for " + instrument.domains[d].domain_id);
    }
    add_column("total_unweighted", total_unweighted, 0.0, 1.0,
               "Mean rescaled item score");
    add_column("total_utility", total_utility, instrument.utility_bounds[0],
               instrument.utility_bounds[1], "Instrument utility (" + instrument.name + ")");

    return validate_dataset(table, dict, base.metadata);
}

} // namespace chem
