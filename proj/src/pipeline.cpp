#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "chem/catalogue.hpp"
#include "chem/csv.hpp"
#include "chem/dataset.hpp"
#include "chem/describe.hpp"
#include "chem/error.hpp"
#include "chem/hash.hpp"
#include "chem/instrument.hpp"
#include "chem/io.hpp"
#include "chem/manifest.hpp"
#include "chem/predict.hpp"
#include "chem/report.hpp"
#include "chem/synth.hpp"

namespace chem {

namespace {

struct StepContext {
    const ManifestStep& step;
    const PipelineManifest& manifest;
    std::vector<std::filesystem::path> inputs;  // resolved
    std::vector<std::filesystem::path> outputs; // resolved under workdir
};

DatasetMetadata metadata_from_params(const nlohmann::json& params) {
    DatasetMetadata md;
    md.uid_var = params.value("uid", "uid");
    if (params.contains("round") && !params.at("round").is_null()) {
        md.round_var = params.at("round").get<std::string>();
    }
    if (params.contains("group") && !params.at("group").is_null()) {
        md.group_var = params.at("group").get<std::string>();
    }
    return md;
}

ValidatedDataset load_validated(const std::filesystem::path& table_path,
                                const std::filesystem::path& dict_path,
                                const nlohmann::json& params) {
    auto table = ingest_table(read_file(table_path), params.value("missing_marker", "NA"));
    auto dict = load_dictionary(read_file(dict_path));
    return validate_dataset(table, dict, metadata_from_params(params));
}

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

void require_io(const StepContext& ctx, size_t n_in, size_t n_out) {
    if (ctx.inputs.size() < n_in || ctx.outputs.size() < n_out) {
        throw Error("step '" + ctx.step.step_id + "': expected at least " +
                    std::to_string(n_in) + " inputs and " + std::to_string(n_out) + " outputs");
    }
}

void run_ingest(const StepContext& ctx) {
    require_io(ctx, 1, 1);
    auto table = ingest_table(read_file(ctx.inputs[0]),
                              ctx.step.params.value("missing_marker", "NA"));
    write_file(ctx.outputs[0], table_to_csv(table));
}

void run_validate(const StepContext& ctx) {
    require_io(ctx, 2, 1);
    auto ds = load_validated(ctx.inputs[0], ctx.inputs[1], ctx.step.params);
    write_file(ctx.outputs[0], table_to_csv(ds.table));
    if (ctx.outputs.size() > 1) write_file(ctx.outputs[1], ds.validation_stamp + "\n");
}

void run_describe(const StepContext& ctx) {
    require_io(ctx, 2, 1);
    auto ds = load_validated(ctx.inputs[0], ctx.inputs[1], ctx.step.params);
    StratifyOptions opts;
    opts.by_group = ctx.step.params.value("by_group", false);
    opts.by_round = ctx.step.params.value("by_round", false);
    auto summary = describe_dataset(ds, opts);
    if (ctx.outputs[0].extension() == ".json") {
        write_file(ctx.outputs[0], summary.to_json().dump(2) + "\n");
    } else {
        write_file(ctx.outputs[0], summary.to_text());
    }
}

void run_synth(const StepContext& ctx) {
    require_io(ctx, 2, 1);
    auto ds = load_validated(ctx.inputs[0], ctx.inputs[1], ctx.step.params);
    auto n_out = ctx.step.params.value("n_out", ds.table.n_rows());
    auto seed = ctx.step.params.value("seed", ctx.manifest.seed);
    auto synth = synthesize_dataset(ds, n_out, seed);
    write_file(ctx.outputs[0], table_to_csv(synth.table));
}

void run_score(const StepContext& ctx) {
    require_io(ctx, 3, 2);
    auto ds = load_validated(ctx.inputs[0], ctx.inputs[1], ctx.step.params);
    auto inst = load_instrument(read_file(ctx.inputs[2]));
    auto scored = score_dataset(attach_instrument(ds, inst));
    auto extended = scored.as_validated();
    write_file(ctx.outputs[0], table_to_csv(extended.table));
    write_file(ctx.outputs[1], extended.dictionary.to_csv());
}

void run_fit(const StepContext& ctx) {
    require_io(ctx, 2, 1);
    auto ds = load_validated(ctx.inputs[0], ctx.inputs[1], ctx.step.params);
    const auto& p = ctx.step.params;

    std::vector<ModelFamily> families;
    for (const auto& f : p.at("families")) {
        families.push_back({family_from_string(f.get<std::string>())});
    }
    auto spec = specify_candidates(
        ds, p.at("target").get<std::string>(),
        p.at("predictors").get<std::vector<std::string>>(),
        p.value("covariates", std::vector<std::string>{}), families, p.value("folds", 5),
        p.value("seed", ctx.manifest.seed), p.value("cluster", ""));

    auto evaluated = cross_validate(ds, spec);
    // Fixed timestamp unless supplied, so reruns stay byte-identical.
    auto cat = build_catalogue(evaluated, ds.validation_stamp,
                               p.value("instrument", ""),
                               p.value("created_utc", "1970-01-01T00:00:00Z"),
                               p.value("identifier", ""));
    write_file(ctx.outputs[0], catalogue_to_json(cat) + "\n");
    if (ctx.outputs.size() > 1) write_file(ctx.outputs[1], performance_csv(cat));
}

void run_predict(const StepContext& ctx) {
    require_io(ctx, 3, 1);
    auto cat = catalogue_from_json(read_file(ctx.inputs[0]));
    auto ds = load_validated(ctx.inputs[1], ctx.inputs[2], ctx.step.params);
    const auto& p = ctx.step.params;

    size_t index = p.value("model_index", 0);
    if (index >= cat.models.size()) {
        throw Error("model_index " + std::to_string(index) + " out of range (catalogue has " +
                    std::to_string(cat.models.size()) + " models)");
    }
    PredictionRequest req;
    req.model = cat.models[index].model;
    req.newdata = &ds;
    if (p.contains("variable_map")) {
        req.variable_map = p.at("variable_map").get<std::map<std::string, std::string>>();
    } else {
        // identity map: coefficient names are column names
        for (const auto& name : req.model.coef_names) {
            if (name != "(intercept)") req.variable_map[name] = name;
        }
    }
    if (p.contains("bounds")) {
        auto b = p.at("bounds").get<std::vector<double>>();
        req.lower_bound = b.at(0);
        req.upper_bound = b.at(1);
    }
    auto result = predict_utility(req);

    const auto& uid_col = ds.table.column(ds.metadata.uid_var);
    const std::vector<Value>* round_col =
        ds.metadata.round_var ? &ds.table.column(*ds.metadata.round_var) : nullptr;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"uid", "round", "predicted_utility", "clamped"});
    for (size_t r = 0; r < ds.table.n_rows(); ++r) {
        rows.push_back({value_to_text(uid_col[r]),
                        round_col ? value_to_text((*round_col)[r]) : "",
                        result.utility[r] ? fmt(*result.utility[r], "%.17g") : "NA",
                        result.clamped[r] ? "1" : "0"});
    }
    write_file(ctx.outputs[0], write_csv(rows));
}

void run_qalys(const StepContext& ctx) {
    require_io(ctx, 2, 1);
    auto ds = load_validated(ctx.inputs[0], ctx.inputs[1], ctx.step.params);
    const auto& p = ctx.step.params;
    auto result = compute_qalys(ds, p.at("utility_var").get<std::string>(),
                                p.at("date_var").get<std::string>(),
                                p.at("round_start").get<std::string>(),
                                p.at("round_end").get<std::string>());
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"uid", "u_start", "u_end", "days", "qalys"});
    for (const auto& rec : result.records) {
        rows.push_back({rec.uid, fmt(rec.u_start, "%.17g"), fmt(rec.u_end, "%.17g"),
                        fmt(rec.days, "%.17g"), fmt(rec.qalys, "%.17g")});
    }
    write_file(ctx.outputs[0], write_csv(rows));
    if (ctx.outputs.size() > 1) {
        std::string skipped;
        for (const auto& uid : result.skipped) skipped += uid + "\n";
        write_file(ctx.outputs[1], skipped);
    }
}

void run_report(const StepContext& ctx) {
    require_io(ctx, 1, 1);
    auto tmpl = ReportTemplate::parse(read_file(ctx.inputs[0]));
    RenderContext render_ctx = ctx.step.params.value("context", nlohmann::json::object());

    // A catalogue input auto-populates summary keys and the performance table.
    if (ctx.inputs.size() > 1) {
        auto cat = catalogue_from_json(read_file(ctx.inputs[1]));
        render_ctx["instrument"] = cat.instrument;
        render_ctx["toolkit_version"] = cat.toolkit_version;
        render_ctx["dataset_fingerprint"] = cat.dataset_fingerprint;
        render_ctx["created_utc"] = cat.created_utc;
        render_ctx["n_models"] = cat.models.size();
        if (!cat.models.empty()) {
            const auto& best = cat.models.front().performance;
            render_ctx["best_family"] = to_string(best.family.kind);
            render_ctx["best_predictors"] = [&] {
                std::string s;
                for (size_t i = 0; i < best.predictors.size(); ++i) {
                    if (i) s += "+";
                    s += best.predictors[i];
                }
                return s;
            }();
            render_ctx["best_rmse_cv"] = fmt(best.rmse_cv);
            render_ctx["best_mae_cv"] = fmt(best.mae_cv);
            render_ctx["best_r2_cv"] = best.r2_cv ? fmt(*best.r2_cv) : "NA";
        }
        nlohmann::json table;
        table["columns"] = {"family", "predictors", "covariates", "r2_cv", "rmse_cv", "mae_cv"};
        auto rows = nlohmann::json::array();
        for (const auto& em : cat.models) {
            const auto& pf = em.performance;
            std::string preds, covs;
            for (size_t i = 0; i < pf.predictors.size(); ++i) {
                if (i) preds += "+";
                preds += pf.predictors[i];
            }
            for (size_t i = 0; i < pf.covariates.size(); ++i) {
                if (i) covs += "+";
                covs += pf.covariates[i];
            }
            rows.push_back({to_string(pf.family.kind), preds, covs,
                            pf.r2_cv ? fmt(*pf.r2_cv, "%.4f") : "NA", fmt(pf.rmse_cv, "%.4f"),
                            fmt(pf.mae_cv, "%.4f")});
        }
        table["rows"] = rows;
        render_ctx["performance"] = table;
    }

    auto rendered = render_template(tmpl, render_ctx);
    write_file(ctx.outputs[0], rendered.text);
}

using StepRunner = void (*)(const StepContext&);

StepRunner find_runner(const std::string& module, const std::string& verb) {
    static const std::map<std::pair<std::string, std::string>, StepRunner> runners = {
        {{"data", "ingest"}, run_ingest},
        {{"data", "validate"}, run_validate},
        {{"data", "describe"}, run_describe},
        {{"data", "transform"}, run_synth},
        {{"scoring", "score"}, run_score},
        {{"mapping", "evaluate"}, run_fit},
        {{"predict", "predict"}, run_predict},
        {{"predict", "transform"}, run_qalys},
        {{"report", "report"}, run_report},
    };
    auto it = runners.find({module, verb});
    return it == runners.end() ? nullptr : it->second;
}

} // namespace

RunRecord run_manifest(const PipelineManifest& manifest, const std::filesystem::path& workdir,
                       const std::filesystem::path& base_dir) {
    std::filesystem::create_directories(workdir);
    std::set<std::string> step_outputs;
    for (const auto& s : manifest.steps) {
        step_outputs.insert(s.outputs.begin(), s.outputs.end());
    }

    RunRecord record;
    record.ok = true;
    bool halted = false;

    for (const auto& step : manifest.steps) {
        StepRecord sr;
        sr.step_id = step.step_id;
        if (halted) {
            sr.status = "skipped";
            record.steps.push_back(std::move(sr));
            continue;
        }

        StepContext ctx{step, manifest, {}, {}};
        for (const auto& in : step.inputs) {
            std::filesystem::path p(in);
            if (step_outputs.count(in)) p = workdir / in;
            else if (!p.is_absolute()) p = base_dir / p;
            ctx.inputs.push_back(p);
        }
        for (const auto& out : step.outputs) ctx.outputs.push_back(workdir / out);

        auto start = std::chrono::steady_clock::now();
        try {
            for (size_t i = 0; i < ctx.inputs.size(); ++i) {
                sr.input_hashes[step.inputs[i]] = sha256_hex(read_file(ctx.inputs[i]));
            }
            StepRunner runner = find_runner(step.module, step.verb);
            if (!runner) {
                throw Error("no step runner for module '" + step.module + "', verb '" +
                            step.verb + "'");
            }
            runner(ctx);
            for (size_t i = 0; i < ctx.outputs.size(); ++i) {
                sr.output_hashes[step.outputs[i]] = sha256_hex(read_file(ctx.outputs[i]));
            }
            sr.status = "ok";
        } catch (const ValidationError& e) {
            sr.status = "failed";
            sr.error = e.what();
            record.ok = false;
            record.validation_failure = true;
            halted = true;
        } catch (const std::exception& e) {
            sr.status = "failed";
            sr.error = e.what();
            record.ok = false;
            halted = true;
        }
        sr.duration_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - start)
                                               .count());
        record.steps.push_back(std::move(sr));
    }

    // Hash over deterministic content only (no durations).
    std::string canon;
    for (const auto& sr : record.steps) {
        canon += sr.step_id + "\x1f" + sr.status + "\x1f";
        for (const auto& [name, hash] : sr.input_hashes) canon += name + "=" + hash + ";";
        canon += "\x1f";
        for (const auto& [name, hash] : sr.output_hashes) canon += name + "=" + hash + ";";
        canon += "\x1e";
    }
    record.record_hash = sha256_hex(canon);
    return record;
}

} // namespace chem
