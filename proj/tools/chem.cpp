// chem: command-line front end for the toolkit.
//
// Exit codes: 0 success, 2 data validation failure, 1 any other error.

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "chem/catalogue.hpp"
#include "chem/csv.hpp"
#include "chem/dataset.hpp"
#include "chem/describe.hpp"
#include "chem/error.hpp"
#include "chem/instrument.hpp"
#include "chem/io.hpp"
#include "chem/manifest.hpp"
#include "chem/predict.hpp"
#include "chem/registry.hpp"
#include "chem/report.hpp"
#include "chem/synth.hpp"

namespace {

using namespace chem;

struct DataArgs {
    std::string data;
    std::string dict;
    std::string uid = "uid";
    std::string round;
    std::string group;
    std::string missing = "NA";
};

void add_data_flags(CLI::App* cmd, DataArgs& args) {
    cmd->add_option("--data", args.data, "records CSV file")->required();
    cmd->add_option("--dict", args.dict, "data dictionary CSV file")->required();
    cmd->add_option("--uid", args.uid, "unique person identifier column");
    cmd->add_option("--round", args.round, "data collection round column");
    cmd->add_option("--group", args.group, "group assignment column");
    cmd->add_option("--missing", args.missing, "missing value marker (default NA)");
}

ValidatedDataset load(const DataArgs& args) {
    auto table = ingest_table(read_file(args.data), args.missing);
    auto dict = load_dictionary(read_file(args.dict));
    DatasetMetadata md;
    md.uid_var = args.uid;
    if (!args.round.empty()) md.round_var = args.round;
    if (!args.group.empty()) md.group_var = args.group;
    return validate_dataset(table, dict, md);
}

std::string join(const std::vector<std::string>& v, const char* sep = "+") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"chem: transparent, reusable, updatable health-economic modelling toolkit"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap internal parallelism");

    // validate (verb: validate)
    auto* c_validate = app.add_subcommand("validate", "[verb: validate] check records "
                                                      "against a data dictionary");
    DataArgs va;
    add_data_flags(c_validate, va);
    std::string v_out;
    c_validate->add_option("--out", v_out, "write the validated table CSV here");
    c_validate->callback([&] {
        auto ds = load(va);
        if (!v_out.empty()) write_file(v_out, table_to_csv(ds.table));
        std::cout << "ok: " << ds.table.n_rows() << " rows, stamp " << ds.validation_stamp
                  << "\n";
    });

    // describe (verb: describe)
    auto* c_describe = app.add_subcommand("describe", "[verb: describe] descriptive "
                                                      "statistics by group/round");
    DataArgs da;
    add_data_flags(c_describe, da);
    bool by_group = false, by_round = false, as_json = false;
    std::string d_out;
    c_describe->add_flag("--by-group", by_group, "stratify by group");
    c_describe->add_flag("--by-round", by_round, "stratify by round");
    c_describe->add_flag("--json", as_json, "emit JSON instead of text");
    c_describe->add_option("--out", d_out, "output file (default stdout)");
    c_describe->callback([&] {
        auto summary = describe_dataset(load(da), {by_group, by_round});
        std::string text = as_json ? summary.to_json().dump(2) + "\n" : summary.to_text();
        if (d_out.empty()) std::cout << text;
        else write_file(d_out, text);
    });

    // synth (verb: transform)
    auto* c_synth = app.add_subcommand("synth", "[verb: transform] generate a synthetic "
                                                "toy dataset");
    DataArgs sa;
    add_data_flags(c_synth, sa);
    std::size_t n_out = 0;
    std::uint64_t synth_seed = 0;
    std::string s_out;
    c_synth->add_option("--n", n_out, "rows to generate (default: source size)");
    c_synth->add_option("--seed", synth_seed, "random seed")->required();
    c_synth->add_option("--out", s_out, "output CSV")->required();
    c_synth->callback([&] {
        auto ds = load(sa);
        auto synth = synthesize_dataset(ds, n_out ? n_out : ds.table.n_rows(), synth_seed);
        write_file(s_out, table_to_csv(synth.table));
        std::cout << "wrote " << synth.table.n_rows() << " synthetic rows to " << s_out << "\n";
    });

    // score (verb: score)
    auto* c_score = app.add_subcommand("score", "[verb: score] apply an instrument "
                                                "scoring engine");
    DataArgs sca;
    add_data_flags(c_score, sca);
    std::string instrument_path, sc_out, sc_out_dict;
    c_score->add_option("--instrument", instrument_path, "instrument definition JSON")
        ->required();
    c_score->add_option("--out", sc_out, "scored table CSV")->required();
    c_score->add_option("--out-dict", sc_out_dict, "dictionary covering the score columns");
    c_score->callback([&] {
        auto ds = load(sca);
        auto inst = load_instrument(read_file(instrument_path));
        auto scored = score_dataset(attach_instrument(ds, inst));
        auto extended = scored.as_validated();
        write_file(sc_out, table_to_csv(extended.table));
        if (!sc_out_dict.empty()) write_file(sc_out_dict, extended.dictionary.to_csv());
        std::cout << "scored " << extended.table.n_rows() << " rows with " << inst.name
                  << " (" << scored.clamp_count << " clamped)\n";
    });

    // fit (verb: evaluate)
    auto* c_fit = app.add_subcommand("fit", "[verb: evaluate] cross-validate mapping "
                                            "models and build a catalogue");
    DataArgs fa;
    add_data_flags(c_fit, fa);
    std::string target, cluster, instrument_name, created_utc, f_out, f_perf;
    std::vector<std::string> predictors, covariates, family_names;
    int folds = 5;
    std::uint64_t fit_seed = 0;
    c_fit->add_option("--target", target, "utility column to predict")->required();
    c_fit->add_option("--predictor", predictors, "candidate predictor (repeatable)")
        ->required();
    c_fit->add_option("--covariate", covariates, "covariate (repeatable)");
    c_fit->add_option("--family", family_names,
                      "model family (repeatable; default: all six)");
    c_fit->add_option("--folds", folds, "cross-validation folds");
    c_fit->add_option("--seed", fit_seed, "fold-assignment seed");
    c_fit->add_option("--cluster", cluster, "cluster column for mixed models (default uid)");
    c_fit->add_option("--instrument-name", instrument_name, "instrument label for the catalogue");
    c_fit->add_option("--created-utc", created_utc, "override catalogue timestamp");
    c_fit->add_option("--out", f_out, "catalogue JSON")->required();
    c_fit->add_option("--perf", f_perf, "performance table CSV");
    c_fit->callback([&] {
        auto ds = load(fa);
        std::vector<ModelFamily> families;
        if (family_names.empty()) {
            family_names = {"ols", "glm_gaussian_log", "glm_gamma_log", "ols_logit_transform",
                            "ols_cloglog_transform", "lmm_random_intercept"};
        }
        for (const auto& f : family_names) families.push_back({family_from_string(f)});
        auto spec = specify_candidates(ds, target, predictors, covariates, families, folds,
                                       fit_seed, cluster);
        auto evaluated = cross_validate(ds, spec);
        auto cat = build_catalogue(evaluated, ds.validation_stamp, instrument_name,
                                   created_utc.empty() ? current_utc_timestamp() : created_utc);
        write_file(f_out, catalogue_to_json(cat) + "\n");
        if (!f_perf.empty()) write_file(f_perf, performance_csv(cat));
        const auto& best = cat.models.front().performance;
        std::cout << "evaluated " << cat.models.size() << " models; best "
                  << to_string(best.family.kind) << " (" << join(best.predictors)
                  << "), cv rmse " << best.rmse_cv << "\n";
    });

    // predict (verb: predict)
    auto* c_predict = app.add_subcommand("predict", "[verb: predict] out-of-sample utility "
                                                    "predictions from a catalogue model");
    DataArgs pa;
    add_data_flags(c_predict, pa);
    std::string catalogue_path, p_out;
    std::size_t model_index = 0;
    std::vector<std::string> map_args;
    c_predict->add_option("--catalogue", catalogue_path, "model catalogue JSON")->required();
    c_predict->add_option("--model-index", model_index, "model to apply (0 = best ranked)");
    c_predict->add_option("--map", map_args, "coefficient=column mapping (repeatable; "
                                             "default: identity)");
    c_predict->add_option("--out", p_out, "predictions CSV")->required();
    c_predict->callback([&] {
        auto cat = catalogue_from_json(read_file(catalogue_path));
        if (model_index >= cat.models.size()) {
            throw Error("model-index out of range (catalogue has " +
                        std::to_string(cat.models.size()) + " models)");
        }
        auto ds = load(pa);
        PredictionRequest req;
        req.model = cat.models[model_index].model;
        req.newdata = &ds;
        for (const auto& m : map_args) {
            auto eq = m.find('=');
            if (eq == std::string::npos) throw Error("--map expects coefficient=column");
            req.variable_map[m.substr(0, eq)] = m.substr(eq + 1);
        }
        if (req.variable_map.empty()) {
            for (const auto& name : req.model.coef_names) {
                if (name != "(intercept)") req.variable_map[name] = name;
            }
        }
        auto result = predict_utility(req);
        const auto& uid_col = ds.table.column(ds.metadata.uid_var);
        const std::vector<Value>* round_col =
            ds.metadata.round_var ? &ds.table.column(*ds.metadata.round_var) : nullptr;
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"uid", "round", "predicted_utility", "clamped"});
        for (size_t r = 0; r < ds.table.n_rows(); ++r) {
            char buf[40];
            std::string u = "NA";
            if (result.utility[r]) {
                std::snprintf(buf, sizeof(buf), "%.17g", *result.utility[r]);
                u = buf;
            }
            rows.push_back({value_to_text(uid_col[r]),
                            round_col ? value_to_text((*round_col)[r]) : "", u,
                            result.clamped[r] ? "1" : "0"});
        }
        write_file(p_out, write_csv(rows));
        std::cout << "predicted " << ds.table.n_rows() << " rows (" << result.clamp_count
                  << " clamped)\n";
    });

    // qalys (verb: transform)
    auto* c_qalys = app.add_subcommand("qalys", "[verb: transform] QALYs from paired "
                                                "utility predictions");
    DataArgs qa;
    add_data_flags(c_qalys, qa);
    std::string utility_var, date_var, round_start, round_end, q_out;
    c_qalys->add_option("--utility", utility_var, "utility column")->required();
    c_qalys->add_option("--date", date_var, "date or day-offset column")->required();
    c_qalys->add_option("--round-start", round_start, "starting round value")->required();
    c_qalys->add_option("--round-end", round_end, "ending round value")->required();
    c_qalys->add_option("--out", q_out, "QALY CSV")->required();
    c_qalys->callback([&] {
        auto ds = load(qa);
        auto result = compute_qalys(ds, utility_var, date_var, round_start, round_end);
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"uid", "u_start", "u_end", "days", "qalys"});
        char buf[40];
        auto num = [&](double v) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return std::string(buf);
        };
        for (const auto& rec : result.records) {
            rows.push_back({rec.uid, num(rec.u_start), num(rec.u_end), num(rec.days),
                            num(rec.qalys)});
        }
        write_file(q_out, write_csv(rows));
        std::cout << result.records.size() << " QALY records";
        if (!result.skipped.empty()) {
            std::cout << "; skipped " << result.skipped.size() << " uids ("
                      << join(result.skipped, ", ") << ")";
        }
        std::cout << "\n";
    });

    // report (verb: report)
    auto* c_report = app.add_subcommand("report", "[verb: report] render a text report "
                                                  "from a template");
    std::string template_path, context_path, report_catalogue, r_out;
    c_report->add_option("--template", template_path, "report template")->required();
    c_report->add_option("--context", context_path, "JSON context file");
    c_report->add_option("--catalogue", report_catalogue,
                         "catalogue JSON to auto-populate summary keys");
    c_report->add_option("--out", r_out, "rendered report")->required();
    c_report->callback([&] {
        PipelineManifest m;
        ManifestStep step;
        step.step_id = "report";
        step.module = "report";
        step.verb = "report";
        step.inputs.push_back(template_path);
        if (!report_catalogue.empty()) step.inputs.push_back(report_catalogue);
        step.outputs.push_back(std::filesystem::path(r_out).filename().string());
        if (!context_path.empty()) {
            step.params["context"] = nlohmann::json::parse(read_file(context_path));
        }
        m.steps.push_back(step);
        auto parent = std::filesystem::path(r_out).has_parent_path()
                          ? std::filesystem::path(r_out).parent_path()
                          : std::filesystem::path(".");
        auto record = run_manifest(m, parent, ".");
        if (!record.ok) throw Error(record.steps.front().error);
        std::cout << "wrote " << r_out << "\n";
    });

    // run (verb: report)
    auto* c_run = app.add_subcommand("run", "[verb: report] execute a replication manifest");
    std::string manifest_path, workdir = "out", record_path;
    c_run->add_option("--manifest", manifest_path, "pipeline manifest JSON")->required();
    c_run->add_option("--workdir", workdir, "output directory");
    c_run->add_option("--record", record_path, "run record JSON (default "
                                               "<workdir>/run_record.json)");
    c_run->callback([&] {
        auto parsed = PipelineManifest::from_json(nlohmann::json::parse(read_file(manifest_path)));
        auto base_dir = std::filesystem::path(manifest_path).has_parent_path()
                            ? std::filesystem::path(manifest_path).parent_path()
                            : std::filesystem::path(".");
        auto manifest = build_manifest(parsed.steps, parsed.seed, base_dir);
        auto record = run_manifest(manifest, workdir, base_dir);
        write_file(record_path.empty() ? std::filesystem::path(workdir) / "run_record.json"
                                       : std::filesystem::path(record_path),
                   record.to_json().dump(2) + "\n");
        for (const auto& s : record.steps) {
            std::cout << s.step_id << ": " << s.status << "\n";
            if (!s.error.empty()) std::cerr << "  " << s.error << "\n";
        }
        std::cout << "record hash " << record.record_hash << "\n";
        if (!record.ok) {
            if (record.validation_failure) throw ValidationError("pipeline halted at validation");
            throw Error("pipeline failed");
        }
    });

    // search (verb: search)
    auto* c_search = app.add_subcommand("search", "[verb: search] query a registry index");
    std::string registry_loc, query, kind_filter;
    bool include_deprecated = false;
    c_search->add_option("--registry", registry_loc,
                         "registry directory or URL (default READY_REGISTRY_URL)");
    c_search->add_option("--query", query, "keyword query")->required();
    c_search->add_option("--kind", kind_filter, "filter: module|dataset|program|catalogue");
    c_search->add_flag("--include-deprecated", include_deprecated, "include deprecated entries");
    c_search->callback([&] {
        auto reg = open_registry(registry_loc);
        SearchOptions opts;
        if (!kind_filter.empty()) opts.kind = artifact_kind_from_string(kind_filter);
        opts.include_deprecated = include_deprecated;
        for (const auto& e : reg->search_index(query, opts)) {
            std::cout << e.identifier << " " << e.version.str() << " [" << to_string(e.kind)
                      << "]" << (e.deprecated ? " (deprecated)" : "") << " " << e.description
                      << "\n";
        }
    });

    // publish (verb: share)
    auto* c_publish = app.add_subcommand("publish", "[verb: share] publish an artifact");
    std::string pub_registry, pub_file, pub_id, pub_version, pub_kind = "dataset",
                pub_description, pub_citation;
    std::vector<std::string> pub_keywords;
    bool pub_confidential = false;
    c_publish->add_option("--registry", pub_registry, "registry directory or URL");
    c_publish->add_option("--file", pub_file, "artifact file")->required();
    c_publish->add_option("--id", pub_id, "artifact identifier")->required();
    c_publish->add_option("--version", pub_version, "semantic version")->required();
    c_publish->add_option("--kind", pub_kind, "module|dataset|program|catalogue");
    c_publish->add_option("--keyword", pub_keywords, "search keyword (repeatable)");
    c_publish->add_option("--description", pub_description, "entry description");
    c_publish->add_option("--citation", pub_citation, "citation text");
    c_publish->add_flag("--confidential", pub_confidential,
                        "mark dataset confidential (publishing will be refused)");
    c_publish->callback([&] {
        auto reg = open_registry(pub_registry);
        PublishMetadata md;
        md.identifier = pub_id;
        md.kind = artifact_kind_from_string(pub_kind);
        md.version = SemVer::parse(pub_version);
        md.keywords = pub_keywords;
        md.description = pub_description;
        md.citation = pub_citation;
        md.confidential = pub_confidential;
        auto entry = reg->publish_artifact(read_file(pub_file), md);
        std::cout << "published " << entry.identifier << " " << entry.version.str() << " ("
                  << entry.content_hash << ")\n";
    });

    // fetch (verb: ingest)
    auto* c_fetch = app.add_subcommand("fetch", "[verb: ingest] retrieve an artifact");
    std::string fetch_registry, fetch_id, fetch_version = "latest", fetch_out;
    c_fetch->add_option("--registry", fetch_registry, "registry directory or URL");
    c_fetch->add_option("--id", fetch_id, "artifact identifier")->required();
    c_fetch->add_option("--version", fetch_version, "exact version or 'latest'");
    c_fetch->add_option("--out", fetch_out, "output file")->required();
    c_fetch->callback([&] {
        auto reg = open_registry(fetch_registry);
        auto fetched = reg->fetch_artifact(fetch_id, fetch_version);
        write_file(fetch_out, fetched.bytes);
        std::cout << "fetched " << fetched.entry.identifier << " "
                  << fetched.entry.version.str() << " -> " << fetch_out << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
