#include "chem/metrics.hpp"

#include <cmath>
#include <limits>

#include "chem/error.hpp"

namespace chem {

Metrics compute_metrics(const std::vector<double>& observed,
                        const std::vector<double>& predicted) {
    if (observed.size() != predicted.size()) {
        throw Error("observed and predicted lengths differ");
    }
    if (observed.size() < 2) throw Error("need at least 2 observations");

    const size_t n = observed.size();
    double mean = 0;
    for (double v : observed) mean += v;
    mean /= static_cast<double>(n);

    double sse = 0, sst = 0, sae = 0;
    for (size_t i = 0; i < n; ++i) {
        double e = observed[i] - predicted[i];
        sse += e * e;
        sae += std::abs(e);
        sst += (observed[i] - mean) * (observed[i] - mean);
    }

    Metrics m;
    m.rmse = std::sqrt(sse / static_cast<double>(n));
    m.mae = sae / static_cast<double>(n);
    if (sst > 0) m.r2 = 1.0 - sse / sst;
    return m;
}

CorrelationMatrix correlation_matrix(const ValidatedDataset& ds,
                                     const std::vector<std::string>& vars) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const size_t k = vars.size();

    std::vector<const std::vector<Value>*> cols;
    for (const auto& v : vars) {
        const DictionaryEntry* e = ds.dictionary.find(v);
        if (!e || (e->var_class != VarClass::integer && e->var_class != VarClass::real)) {
            throw Error("variable '" + v + "' is not numeric");
        }
        cols.push_back(&ds.table.column(v));
    }

    CorrelationMatrix out;
    out.variables = vars;
    out.values.assign(k, std::vector<double>(k, nan));

    for (size_t a = 0; a < k; ++a) {
        out.values[a][a] = 1.0;
        for (size_t b = a + 1; b < k; ++b) {
            std::vector<double> xs, ys;
            for (size_t r = 0; r < ds.table.n_rows(); ++r) {
                double x, y;
                if (numeric_value((*cols[a])[r], x) && numeric_value((*cols[b])[r], y)) {
                    xs.push_back(x);
                    ys.push_back(y);
                }
            }
            if (xs.size() < 3) {
                throw Error("variables '" + vars[a] + "' and '" + vars[b] +
                            "' have fewer than 3 pairwise-complete observations");
            }
            double mx = 0, my = 0;
            for (size_t i = 0; i < xs.size(); ++i) {
                mx += xs[i];
                my += ys[i];
            }
            mx /= static_cast<double>(xs.size());
            my /= static_cast<double>(ys.size());
            double sxy = 0, sxx = 0, syy = 0;
            for (size_t i = 0; i < xs.size(); ++i) {
                sxy += (xs[i] - mx) * (ys[i] - my);
                sxx += (xs[i] - mx) * (xs[i] - mx);
                syy += (ys[i] - my) * (ys[i] - my);
            }
            double r = (sxx > 0 && syy > 0) ? sxy / std::sqrt(sxx * syy) : nan;
            out.values[a][b] = r;
            out.values[b][a] = r;
        }
    }
    return out;
}

} // namespace chem
