#include "chem/describe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "chem/error.hpp"

namespace chem {

std::size_t histogram_bin_count(std::size_t n) {
    if (n == 0) return 1;
    auto bins = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    return std::min<std::size_t>(20, std::max<std::size_t>(1, bins));
}

namespace {

NumericStats numeric_stats(const std::vector<Value>& col, const std::vector<size_t>& rows) {
    NumericStats s;
    std::vector<double> vals;
    vals.reserve(rows.size());
    for (size_t r : rows) {
        double v;
        if (numeric_value(col[r], v)) vals.push_back(v);
        else ++s.n_missing;
    }
    s.n = vals.size();
    if (vals.empty()) return s;

    double sum = 0;
    s.min = s.max = vals.front();
    for (double v : vals) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(vals.size());
    if (vals.size() > 1) {
        double ss = 0;
        for (double v : vals) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(vals.size() - 1));
    }

    const size_t bins = s.min == s.max ? 1 : histogram_bin_count(vals.size());
    const double width = (s.max - s.min) / static_cast<double>(bins);
    s.bin_edges.resize(bins + 1);
    for (size_t b = 0; b <= bins; ++b) s.bin_edges[b] = s.min + width * static_cast<double>(b);
    s.bin_edges.back() = s.max;
    s.bin_counts.assign(bins, 0);
    for (double v : vals) {
        size_t b = width > 0 ? static_cast<size_t>((v - s.min) / width) : 0;
        if (b >= bins) b = bins - 1; // v == max lands in the last bin
        ++s.bin_counts[b];
    }
    return s;
}

CategoricalStats categorical_stats(const std::vector<Value>& col,
                                   const std::vector<size_t>& rows,
                                   const std::vector<std::string>& allowed) {
    CategoricalStats s;
    std::map<std::string, size_t> counts;
    for (const auto& lvl : allowed) counts[lvl] = 0;
    for (size_t r : rows) {
        if (is_missing(col[r])) {
            ++s.n_missing;
        } else {
            ++counts[std::get<std::string>(col[r])];
            ++s.n;
        }
    }
    for (const auto& lvl : allowed) s.levels.push_back({lvl, counts[lvl]});
    return s;
}

std::string stratum_label(const StratumSummary& st) {
    std::string label;
    if (st.group) label += "group=" + *st.group;
    if (st.round) {
        if (!label.empty()) label += ", ";
        label += "round=" + *st.round;
    }
    return label.empty() ? "all" : label;
}

} // namespace

DescriptiveSummary describe_dataset(const ValidatedDataset& ds, StratifyOptions opts) {
    if (opts.by_group && !ds.metadata.group_var) {
        throw Error("cannot stratify by group: no group_var in dataset metadata");
    }
    if (opts.by_round && !ds.metadata.round_var) {
        throw Error("cannot stratify by round: no round_var in dataset metadata");
    }

    const size_t n = ds.table.n_rows();
    // Stratum key -> row indices, in first-seen order.
    std::vector<std::pair<std::pair<std::optional<std::string>, std::optional<std::string>>,
                          std::vector<size_t>>> strata;
    const std::vector<Value>* gcol =
        opts.by_group ? &ds.table.column(*ds.metadata.group_var) : nullptr;
    const std::vector<Value>* rcol =
        opts.by_round ? &ds.table.column(*ds.metadata.round_var) : nullptr;

    for (size_t r = 0; r < n; ++r) {
        std::optional<std::string> g, rd;
        if (gcol) g = value_to_text((*gcol)[r]);
        if (rcol) rd = value_to_text((*rcol)[r]);
        auto key = std::make_pair(g, rd);
        auto it = std::find_if(strata.begin(), strata.end(),
                               [&](const auto& s) { return s.first == key; });
        if (it == strata.end()) {
            strata.push_back({key, {r}});
        } else {
            it->second.push_back(r);
        }
    }
    std::sort(strata.begin(), strata.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    DescriptiveSummary out;
    for (const auto& [key, rows] : strata) {
        StratumSummary st;
        st.group = key.first;
        st.round = key.second;
        st.n_rows = rows.size();
        for (size_t c = 0; c < ds.table.n_cols(); ++c) {
            const auto& name = ds.table.names[c];
            const DictionaryEntry* e = ds.dictionary.find(name);
            VariableSummary vs;
            vs.variable = name;
            if (e && (e->var_class == VarClass::integer || e->var_class == VarClass::real)) {
                vs.numeric = numeric_stats(ds.table.columns[c], rows);
                vs.n = vs.numeric->n;
                vs.n_missing = vs.numeric->n_missing;
            } else if (e && e->var_class == VarClass::categorical) {
                vs.categorical = categorical_stats(ds.table.columns[c], rows, e->allowed_set);
                vs.n = vs.categorical->n;
                vs.n_missing = vs.categorical->n_missing;
            } else {
                for (size_t r : rows) {
                    if (is_missing(ds.table.columns[c][r])) ++vs.n_missing;
                    else ++vs.n;
                }
            }
            st.variables.push_back(std::move(vs));
        }
        out.strata.push_back(std::move(st));
    }
    return out;
}

nlohmann::ordered_json DescriptiveSummary::to_json() const {
    nlohmann::ordered_json strata_j = nlohmann::ordered_json::array();
    for (const auto& st : strata) {
        nlohmann::ordered_json sj;
        sj["group"] = st.group ? nlohmann::ordered_json(*st.group) : nullptr;
        sj["round"] = st.round ? nlohmann::ordered_json(*st.round) : nullptr;
        sj["n_rows"] = st.n_rows;
        auto vars = nlohmann::ordered_json::array();
        for (const auto& vs : st.variables) {
            nlohmann::ordered_json vj;
            vj["variable"] = vs.variable;
            vj["n"] = vs.n;
            vj["n_missing"] = vs.n_missing;
            if (vs.numeric) {
                vj["mean"] = vs.numeric->mean;
                vj["sd"] = vs.numeric->sd;
                vj["min"] = vs.numeric->min;
                vj["max"] = vs.numeric->max;
                vj["histogram"] = {{"edges", vs.numeric->bin_edges},
                                   {"counts", vs.numeric->bin_counts}};
            }
            if (vs.categorical) {
                auto lv = nlohmann::ordered_json::array();
                for (const auto& l : vs.categorical->levels) {
                    lv.push_back({{"level", l.level}, {"count", l.count}});
                }
                vj["levels"] = lv;
            }
            vars.push_back(std::move(vj));
        }
        sj["variables"] = std::move(vars);
        strata_j.push_back(std::move(sj));
    }
    nlohmann::ordered_json j;
    j["strata"] = std::move(strata_j);
    return j;
}

std::string DescriptiveSummary::to_text() const {
    std::ostringstream os;
    char buf[64];
    for (const auto& st : strata) {
        os << "== " << stratum_label(st) << " (n=" << st.n_rows << ") ==\n";
        os << "  variable          n  n_miss        mean          sd         min         max\n";
        for (const auto& vs : st.variables) {
            std::snprintf(buf, sizeof(buf), "  %-14s %5zu  %6zu", vs.variable.c_str(), vs.n,
                          vs.n_missing);
            os << buf;
            if (vs.numeric) {
                std::snprintf(buf, sizeof(buf), "  %10.4f  %10.4f  %10.4f  %10.4f",
                              vs.numeric->mean, vs.numeric->sd, vs.numeric->min,
                              vs.numeric->max);
                os << buf;
            } else if (vs.categorical) {
                os << "  ";
                bool first = true;
                for (const auto& l : vs.categorical->levels) {
                    if (!first) os << ", ";
                    os << l.level << ":" << l.count;
                    first = false;
                }
            }
            os << "\n";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace chem
