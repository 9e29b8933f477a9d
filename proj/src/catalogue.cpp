#include "chem/catalogue.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "chem/csv.hpp"
#include "chem/error.hpp"

namespace chem {

namespace {

std::string num17(double v) {
    if (std::isnan(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string jstr(const std::string& s) {
    return nlohmann::json(s).dump();
}

void write_number_map(std::ostringstream& os, const std::vector<std::string>& names,
                      const std::vector<double>& values) {
    os << "{";
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) os << ",";
        os << jstr(names[i]) << ":" << num17(values[i]);
    }
    os << "}";
}

void write_number_array(std::ostringstream& os, const std::vector<double>& values) {
    os << "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        os << num17(values[i]);
    }
    os << "]";
}

void write_string_array(std::ostringstream& os, const std::vector<std::string>& values) {
    os << "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        os << jstr(values[i]);
    }
    os << "]";
}

// A model may carry only coefficient-level and fold-level payloads. Anything
// sized like the training data (a smuggled row-level column) is refused.
void check_record_free(const EvaluatedModel& em) {
    const auto& m = em.model;
    const auto& p = em.performance;
    const size_t k = p.fold_rmse.size();
    bool ok = m.coefficients.size() == m.coef_names.size() &&
              m.coefficient_se.size() == m.coef_names.size() && k >= 2 &&
              p.fold_mae.size() == k && p.fold_r2.size() == k && 2 * k <= m.n_train;
    if (!ok) throw Error("record-free invariant violated");
}

} // namespace

std::string current_utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ModelCatalogue build_catalogue(const std::vector<EvaluatedModel>& models,
                               const std::string& dataset_fingerprint,
                               const std::string& instrument,
                               const std::string& created_utc,
                               const std::string& identifier) {
    if (models.empty()) throw Error("catalogue requires at least one model");
    for (const auto& em : models) check_record_free(em);
    ModelCatalogue cat;
    cat.dataset_fingerprint = dataset_fingerprint;
    cat.instrument = instrument;
    cat.created_utc = created_utc;
    cat.identifier = identifier;
    cat.models = models;
    return cat;
}

std::string catalogue_to_json(const ModelCatalogue& cat) {
    std::ostringstream os;
    os << "{\"toolkit_version\":" << jstr(cat.toolkit_version)
       << ",\"dataset_fingerprint\":" << jstr(cat.dataset_fingerprint)
       << ",\"instrument\":" << jstr(cat.instrument)
       << ",\"created_utc\":" << jstr(cat.created_utc)
       << ",\"identifier\":" << jstr(cat.identifier) << ",\"models\":[";
    for (size_t i = 0; i < cat.models.size(); ++i) {
        const auto& m = cat.models[i].model;
        const auto& p = cat.models[i].performance;
        if (i) os << ",";
        os << "{\"family\":{\"kind\":" << jstr(to_string(m.family.kind))
           << ",\"max_iter\":" << m.family.max_iter << ",\"tol\":" << num17(m.family.tol)
           << "},\"coefficients\":";
        write_number_map(os, m.coef_names, m.coefficients);
        os << ",\"coefficient_se\":";
        write_number_map(os, m.coef_names, m.coefficient_se);
        os << ",\"sigma\":" << num17(m.sigma)
           << ",\"random_intercept_var\":" << num17(m.random_intercept_var)
           << ",\"epsilon\":" << num17(m.epsilon) << ",\"n_train\":" << m.n_train
           << ",\"converged\":" << (m.converged ? "true" : "false")
           << ",\"iterations\":" << m.iterations << ",\"performance\":{\"predictors\":";
        write_string_array(os, p.predictors);
        os << ",\"covariates\":";
        write_string_array(os, p.covariates);
        os << ",\"r2_in\":" << (p.r2_in ? num17(*p.r2_in) : "null")
           << ",\"rmse_in\":" << num17(p.rmse_in) << ",\"mae_in\":" << num17(p.mae_in)
           << ",\"r2_cv\":" << (p.r2_cv ? num17(*p.r2_cv) : "null")
           << ",\"rmse_cv\":" << num17(p.rmse_cv) << ",\"mae_cv\":" << num17(p.mae_cv)
           << ",\"fold_rmse\":";
        write_number_array(os, p.fold_rmse);
        os << ",\"fold_mae\":";
        write_number_array(os, p.fold_mae);
        os << ",\"fold_r2\":";
        write_number_array(os, p.fold_r2);
        os << "}}";
    }
    os << "]}";
    return os.str();
}

ModelCatalogue catalogue_from_json(const std::string& text) {
    // ordered parse: coefficient order is positional and must survive the trip
    auto j = nlohmann::ordered_json::parse(text);
    ModelCatalogue cat;
    cat.toolkit_version = j.at("toolkit_version").get<std::string>();
    cat.dataset_fingerprint = j.at("dataset_fingerprint").get<std::string>();
    cat.instrument = j.at("instrument").get<std::string>();
    cat.created_utc = j.at("created_utc").get<std::string>();
    cat.identifier = j.value("identifier", "");
    for (const auto& mj : j.at("models")) {
        EvaluatedModel em;
        auto& m = em.model;
        const auto& fj = mj.at("family");
        m.family.kind = family_from_string(fj.at("kind").get<std::string>());
        m.family.max_iter = fj.at("max_iter").get<int>();
        m.family.tol = fj.at("tol").get<double>();
        for (const auto& [name, value] : mj.at("coefficients").items()) {
            m.coef_names.push_back(name);
            m.coefficients.push_back(value.get<double>());
        }
        for (const auto& [name, value] : mj.at("coefficient_se").items()) {
            (void)name;
            m.coefficient_se.push_back(value.get<double>());
        }
        m.sigma = mj.at("sigma").get<double>();
        m.random_intercept_var = mj.at("random_intercept_var").get<double>();
        m.epsilon = mj.at("epsilon").get<double>();
        m.n_train = mj.at("n_train").get<size_t>();
        m.converged = mj.at("converged").get<bool>();
        m.iterations = mj.at("iterations").get<int>();

        auto& p = em.performance;
        p.family = m.family;
        const auto& pj = mj.at("performance");
        p.predictors = pj.at("predictors").get<std::vector<std::string>>();
        p.covariates = pj.at("covariates").get<std::vector<std::string>>();
        if (!pj.at("r2_in").is_null()) p.r2_in = pj.at("r2_in").get<double>();
        p.rmse_in = pj.at("rmse_in").get<double>();
        p.mae_in = pj.at("mae_in").get<double>();
        if (!pj.at("r2_cv").is_null()) p.r2_cv = pj.at("r2_cv").get<double>();
        p.rmse_cv = pj.at("rmse_cv").get<double>();
        p.mae_cv = pj.at("mae_cv").get<double>();
        for (const auto& v : pj.at("fold_rmse")) p.fold_rmse.push_back(v.get<double>());
        for (const auto& v : pj.at("fold_mae")) p.fold_mae.push_back(v.get<double>());
        for (const auto& v : pj.at("fold_r2")) {
            p.fold_r2.push_back(v.is_null() ? std::nan("") : v.get<double>());
        }
        cat.models.push_back(std::move(em));
    }
    return cat;
}

std::string performance_csv(const ModelCatalogue& cat) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"family", "predictors", "covariates", "r2_cv", "rmse_cv", "mae_cv", "r2_in",
                    "rmse_in", "mae_in"});
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += "+";
            out += v[i];
        }
        return out;
    };
    auto opt = [](const std::optional<double>& v) {
        return v ? num17(*v) : std::string("NA");
    };
    for (const auto& em : cat.models) {
        const auto& p = em.performance;
        rows.push_back({to_string(p.family.kind), join(p.predictors), join(p.covariates),
                        opt(p.r2_cv), num17(p.rmse_cv), num17(p.mae_cv), opt(p.r2_in),
                        num17(p.rmse_in), num17(p.mae_in)});
    }
    return write_csv(rows);
}

} // namespace chem
