#include "chem/crossval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "chem/error.hpp"

namespace chem {

CandidateSpec specify_candidates(const ValidatedDataset& ds, const std::string& target,
                                 const std::vector<std::string>& predictors,
                                 const std::vector<std::string>& covariates,
                                 const std::vector<ModelFamily>& families, int folds,
                                 std::uint64_t seed, const std::string& cluster_var) {
    auto check_numeric = [&](const std::string& name, const char* role) {
        if (!ds.table.has_column(name)) {
            throw Error(std::string(role) + " '" + name + "' not found in dataset");
        }
        const DictionaryEntry* e = ds.dictionary.find(name);
        if (!e || (e->var_class != VarClass::integer && e->var_class != VarClass::real)) {
            throw Error(std::string(role) + " '" + name + "' must be numeric");
        }
    };

    check_numeric(target, "target");
    for (const auto& p : predictors) {
        if (p == target) throw Error("target cannot be a predictor");
        check_numeric(p, "predictor");
    }
    for (const auto& c : covariates) {
        if (c == target) throw Error("target cannot be a covariate");
        check_numeric(c, "covariate");
    }
    if (predictors.empty()) throw Error("at least one candidate predictor is required");
    if (families.empty()) throw Error("at least one model family is required");
    if (folds < 2) throw Error("folds must be at least 2");

    CandidateSpec spec;
    spec.target = target;
    spec.predictors = predictors;
    spec.covariates = covariates;
    spec.families = families;
    spec.folds = folds;
    spec.seed = seed;
    spec.cluster_var = cluster_var.empty() ? ds.metadata.uid_var : cluster_var;
    if (!ds.table.has_column(spec.cluster_var)) {
        throw Error("cluster variable '" + spec.cluster_var + "' not found in dataset");
    }
    return spec;
}

std::vector<int> assign_folds(std::size_t n, int k, std::uint64_t seed) {
    if (k < 2) throw Error("folds must be at least 2");
    if (n < 2 * static_cast<size_t>(k)) {
        throw Error("need n >= 2k rows (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                    ")");
    }
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> fold(n);
    for (size_t i = 0; i < n; ++i) {
        fold[order[i]] = static_cast<int>(i % static_cast<size_t>(k));
    }
    return fold;
}

std::vector<int> assign_folds_by_cluster(const std::vector<std::string>& cluster, int k,
                                         std::uint64_t seed) {
    if (k < 2) throw Error("folds must be at least 2");
    std::vector<std::string> ids;
    std::set<std::string> seen;
    for (const auto& c : cluster) {
        if (seen.insert(c).second) ids.push_back(c);
    }
    if (ids.size() < static_cast<size_t>(k)) {
        throw Error("need at least k clusters (" + std::to_string(ids.size()) + " < " +
                    std::to_string(k) + ")");
    }
    std::sort(ids.begin(), ids.end()); // seed-stable regardless of row order
    std::mt19937_64 rng(seed);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::map<std::string, int> cluster_fold;
    for (size_t i = 0; i < ids.size(); ++i) {
        cluster_fold[ids[i]] = static_cast<int>(i % static_cast<size_t>(k));
    }
    std::vector<int> fold(cluster.size());
    for (size_t i = 0; i < cluster.size(); ++i) fold[i] = cluster_fold[cluster[i]];
    return fold;
}

namespace {

struct CompleteCase {
    std::vector<double> y;
    std::vector<std::vector<double>> x; // per variable, ordered predictor then covariates
    std::vector<std::string> cluster;
};

CompleteCase extract(const ValidatedDataset& ds, const std::string& target,
                     const std::vector<std::string>& vars, const std::string& cluster_var) {
    CompleteCase cc;
    cc.x.resize(vars.size());
    const auto& ycol = ds.table.column(target);
    const auto& ccol = ds.table.column(cluster_var);
    std::vector<const std::vector<Value>*> xcols;
    for (const auto& v : vars) xcols.push_back(&ds.table.column(v));

    for (size_t r = 0; r < ds.table.n_rows(); ++r) {
        double yv;
        if (!numeric_value(ycol[r], yv)) continue;
        std::vector<double> xv(vars.size());
        bool ok = true;
        for (size_t j = 0; j < vars.size(); ++j) {
            if (!numeric_value((*xcols[j])[r], xv[j])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        cc.y.push_back(yv);
        for (size_t j = 0; j < vars.size(); ++j) cc.x[j].push_back(xv[j]);
        cc.cluster.push_back(value_to_text(ccol[r]));
    }
    return cc;
}

Design make_design(const CompleteCase& cc, const std::vector<std::string>& vars,
                   const std::vector<size_t>& rows) {
    Design d = Design::with_intercept(rows.size());
    for (size_t j = 0; j < vars.size(); ++j) {
        std::vector<double> col(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) col[i] = cc.x[j][rows[i]];
        d.add(vars[j], std::move(col));
    }
    return d;
}

} // namespace

std::vector<EvaluatedModel> cross_validate(const ValidatedDataset& ds,
                                           const CandidateSpec& spec) {
    std::vector<EvaluatedModel> out;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    size_t family_order = 0;
    std::vector<std::pair<size_t, EvaluatedModel>> ranked;

    for (const auto& family : spec.families) {
        for (const auto& predictor : spec.predictors) {
            std::vector<std::string> vars{predictor};
            vars.insert(vars.end(), spec.covariates.begin(), spec.covariates.end());

            CompleteCase cc = extract(ds, spec.target, vars, spec.cluster_var);
            const size_t n = cc.y.size();
            if (n < 2 * static_cast<size_t>(spec.folds)) {
                throw Error("need n >= 2k complete rows for predictor '" + predictor + "' (n=" +
                            std::to_string(n) + ", k=" + std::to_string(spec.folds) + ")");
            }

            std::vector<size_t> all_rows(n);
            std::iota(all_rows.begin(), all_rows.end(), size_t{0});
            Design full = make_design(cc, vars, all_rows);

            EvaluatedModel em;
            em.model = fit_family(family, cc.y, full, cc.cluster);
            em.performance.family = family;
            em.performance.predictors = {predictor};
            em.performance.covariates = spec.covariates;

            Metrics in = compute_metrics(cc.y, model_predict(em.model, full));
            em.performance.r2_in = in.r2;
            em.performance.rmse_in = in.rmse;
            em.performance.mae_in = in.mae;

            const bool clustered = family.kind == FamilyKind::lmm_random_intercept;
            std::vector<int> fold = clustered
                                        ? assign_folds_by_cluster(cc.cluster, spec.folds, spec.seed)
                                        : assign_folds(n, spec.folds, spec.seed);

            bool r2_defined = true;
            double rmse_sum = 0, mae_sum = 0, r2_sum = 0;
            for (int f = 0; f < spec.folds; ++f) {
                std::vector<size_t> train, test;
                for (size_t i = 0; i < n; ++i) {
                    (fold[i] == f ? test : train).push_back(i);
                }
                if (test.empty() || train.size() <= vars.size() + 1) {
                    throw Error("fold " + std::to_string(f) + " leaves too few training rows");
                }
                std::vector<double> ytr, yte;
                std::vector<std::string> ctr;
                for (size_t i : train) {
                    ytr.push_back(cc.y[i]);
                    ctr.push_back(cc.cluster[i]);
                }
                for (size_t i : test) yte.push_back(cc.y[i]);

                FittedModel fm = fit_family(family, ytr, make_design(cc, vars, train), ctr);
                std::vector<double> pred = model_predict(fm, make_design(cc, vars, test));

                Metrics mt = compute_metrics(yte, pred);
                em.performance.fold_rmse.push_back(mt.rmse);
                em.performance.fold_mae.push_back(mt.mae);
                em.performance.fold_r2.push_back(mt.r2 ? *mt.r2 : nan);
                rmse_sum += mt.rmse;
                mae_sum += mt.mae;
                if (mt.r2) r2_sum += *mt.r2;
                else r2_defined = false;
            }
            em.performance.rmse_cv = rmse_sum / spec.folds;
            em.performance.mae_cv = mae_sum / spec.folds;
            if (r2_defined) em.performance.r2_cv = r2_sum / spec.folds;

            ranked.emplace_back(family_order, std::move(em));
        }
        ++family_order;
    }

    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.performance.rmse_cv != b.second.performance.rmse_cv) {
            return a.second.performance.rmse_cv < b.second.performance.rmse_cv;
        }
        return a.first < b.first; // tie: declared family order
    });
    out.reserve(ranked.size());
    for (auto& [ord, em] : ranked) out.push_back(std::move(em));
    return out;
}

} // namespace chem
