#include "chem/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

#include "chem/error.hpp"

namespace chem {

namespace {

// Stable rank of each element among the given values (ties broken by position).
std::vector<size_t> stable_ranks(const std::vector<double>& vals) {
    std::vector<size_t> order(vals.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    std::vector<size_t> ranks(vals.size());
    for (size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
    return ranks;
}

} // namespace

ValidatedDataset synthesize_dataset(const ValidatedDataset& ds, std::size_t n_out,
                                    std::uint64_t seed) {
    const size_t n_src = ds.table.n_rows();
    if (n_src < 2) throw Error("synthesis requires a source with at least 2 rows");
    if (n_out < 1) throw Error("n_out must be at least 1");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick_row(0, n_src - 1);

    // Shared template rows couple the rank patterns across columns.
    std::vector<size_t> tmpl(n_out);
    for (auto& t : tmpl) t = pick_row(rng);

    const std::set<std::string> source_uids = [&] {
        std::set<std::string> s;
        for (const auto& v : ds.table.column(ds.metadata.uid_var)) {
            if (!is_missing(v)) s.insert(std::get<std::string>(v));
        }
        return s;
    }();

    RawTable out;
    out.names = ds.table.names;
    out.columns.resize(ds.table.n_cols());

    for (size_t c = 0; c < ds.table.n_cols(); ++c) {
        const auto& name = ds.table.names[c];
        const auto& src = ds.table.columns[c];
        auto& dst = out.columns[c];
        dst.resize(n_out, Value{std::monostate{}});

        if (name == ds.metadata.uid_var) {
            size_t counter = 0;
            for (size_t i = 0; i < n_out; ++i) {
                std::string uid;
                do {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "syn_%06zu", ++counter);
                    uid = buf;
                } while (source_uids.count(uid));
                dst[i] = uid;
            }
            continue;
        }

        const DictionaryEntry* entry = ds.dictionary.find(name);
        const bool numeric = entry && (entry->var_class == VarClass::integer ||
                                       entry->var_class == VarClass::real);

        if (numeric) {
            std::vector<size_t> nonmiss_src;
            for (size_t r = 0; r < n_src; ++r) {
                if (!is_missing(src[r])) nonmiss_src.push_back(r);
            }
            if (nonmiss_src.empty()) continue; // all missing stays all missing

            // Rows whose template cell is non-missing get a value; the rest
            // inherit the template's missingness.
            std::vector<size_t> live;
            std::vector<double> tmpl_vals;
            for (size_t i = 0; i < n_out; ++i) {
                double v;
                if (numeric_value(src[tmpl[i]], v)) {
                    live.push_back(i);
                    tmpl_vals.push_back(v);
                }
            }
            std::uniform_int_distribution<size_t> pick_val(0, nonmiss_src.size() - 1);
            std::vector<Value> pool;
            pool.reserve(live.size());
            for (size_t i = 0; i < live.size(); ++i) {
                pool.push_back(src[nonmiss_src[pick_val(rng)]]);
            }
            std::stable_sort(pool.begin(), pool.end(), [](const Value& a, const Value& b) {
                double x = 0, y = 0;
                numeric_value(a, x);
                numeric_value(b, y);
                return x < y;
            });
            auto ranks = stable_ranks(tmpl_vals);
            for (size_t k = 0; k < live.size(); ++k) {
                dst[live[k]] = pool[ranks[k]];
            }
        } else {
            // Empirical frequency sampling, independent of other columns.
            std::vector<size_t> nonmiss_src;
            for (size_t r = 0; r < n_src; ++r) {
                if (!is_missing(src[r])) nonmiss_src.push_back(r);
            }
            if (nonmiss_src.empty()) continue;
            std::uniform_int_distribution<size_t> pick_val(0, nonmiss_src.size() - 1);
            for (size_t i = 0; i < n_out; ++i) {
                if (is_missing(src[tmpl[i]])) continue;
                dst[i] = src[nonmiss_src[pick_val(rng)]];
            }
        }
    }

    return validate_dataset(out, ds.dictionary, ds.metadata);
}

} // namespace chem
