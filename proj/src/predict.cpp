#include "chem/predict.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "chem/error.hpp"

namespace chem {

namespace {

// Days since 1970-01-01 (proleptic Gregorian).
long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

// Accepts an ISO date cell or a numeric day offset.
double cell_to_days(const Value& v, const std::string& uid) {
    double num;
    if (numeric_value(v, num)) return num;
    if (const auto* s = std::get_if<std::string>(&v)) {
        if (s->size() == 10 && (*s)[4] == '-' && (*s)[7] == '-') {
            int y = std::stoi(s->substr(0, 4));
            int m = std::stoi(s->substr(5, 2));
            int d = std::stoi(s->substr(8, 2));
            return static_cast<double>(days_from_civil(y, m, d));
        }
    }
    throw Error("uid " + uid + ": unparseable date value '" + value_to_text(v) + "'");
}

} // namespace

CompatibilityReport check_compatibility(const FittedModel& model, const ValidatedDataset& newdata,
                                        const std::map<std::string, std::string>& variable_map) {
    CompatibilityReport report;
    for (const auto& name : model.coef_names) {
        if (name == "(intercept)") continue;
        auto it = variable_map.find(name);
        if (it == variable_map.end()) {
            report.issues.push_back("coefficient " + name + " has no source column");
            continue;
        }
        if (!newdata.table.has_column(it->second)) {
            report.issues.push_back("column '" + it->second + "' (for coefficient " + name +
                                    ") not found in dataset");
            continue;
        }
        const DictionaryEntry* e = newdata.dictionary.find(it->second);
        if (!e || (e->var_class != VarClass::integer && e->var_class != VarClass::real)) {
            report.issues.push_back("column '" + it->second + "' (for coefficient " + name +
                                    ") has class " + (e ? to_string(e->var_class) : "unknown") +
                                    ", expected numeric");
        }
    }
    report.ok = report.issues.empty();
    return report;
}

PredictionResult predict_utility(const PredictionRequest& request) {
    if (!request.newdata) throw Error("prediction request has no dataset");
    const auto& ds = *request.newdata;
    auto report = check_compatibility(request.model, ds, request.variable_map);
    if (!report.ok) {
        std::string msg = "model/dataset incompatible:";
        for (const auto& issue : report.issues) msg += "\n  " + issue;
        throw Error(msg);
    }

    std::vector<const std::vector<Value>*> cols;
    std::vector<double> betas;
    double intercept = 0;
    for (size_t j = 0; j < request.model.coef_names.size(); ++j) {
        if (request.model.coef_names[j] == "(intercept)") {
            intercept = request.model.coefficients[j];
            continue;
        }
        cols.push_back(&ds.table.column(request.variable_map.at(request.model.coef_names[j])));
        betas.push_back(request.model.coefficients[j]);
    }

    const size_t n = ds.table.n_rows();
    PredictionResult result;
    result.utility.resize(n);
    result.clamped.assign(n, false);
    for (size_t r = 0; r < n; ++r) {
        double eta = intercept;
        bool complete = true;
        for (size_t j = 0; j < cols.size(); ++j) {
            double v;
            if (!numeric_value((*cols[j])[r], v)) {
                complete = false;
                break;
            }
            eta += betas[j] * v;
        }
        if (!complete) continue; // missing predictor -> missing prediction
        double u = inverse_link(request.model.family.kind, eta);
        if (u < request.lower_bound) {
            u = request.lower_bound;
            result.clamped[r] = true;
            ++result.clamp_count;
        } else if (u > request.upper_bound) {
            u = request.upper_bound;
            result.clamped[r] = true;
            ++result.clamp_count;
        }
        result.utility[r] = u;
    }
    return result;
}

double trapezoid_qalys(double u_start, double u_end, double days) {
    return (u_start + u_end) / 2.0 * days / 365.25;
}

QalyResult compute_qalys(const ValidatedDataset& ds, const std::string& utility_var,
                         const std::string& date_var, const std::string& round_start,
                         const std::string& round_end) {
    if (!ds.metadata.round_var) throw Error("dataset has no round variable");
    const auto& uid_col = ds.table.column(ds.metadata.uid_var);
    const auto& round_col = ds.table.column(*ds.metadata.round_var);
    const auto& u_col = ds.table.column(utility_var);
    const auto& d_col = ds.table.column(date_var);

    struct Pair {
        std::optional<size_t> start, end;
    };
    std::map<std::string, Pair> by_uid;
    std::vector<std::string> uid_order;
    for (size_t r = 0; r < ds.table.n_rows(); ++r) {
        std::string uid = value_to_text(uid_col[r]);
        std::string rnd = value_to_text(round_col[r]);
        if (!by_uid.count(uid)) uid_order.push_back(uid);
        auto& p = by_uid[uid];
        if (rnd == round_start) p.start = r;
        else if (rnd == round_end) p.end = r;
    }

    QalyResult out;
    for (const auto& uid : uid_order) {
        const auto& p = by_uid[uid];
        double u0, u1;
        if (!p.start || !p.end || !numeric_value(u_col[*p.start], u0) ||
            !numeric_value(u_col[*p.end], u1)) {
            out.skipped.push_back(uid);
            continue;
        }
        double t0 = cell_to_days(d_col[*p.start], uid);
        double t1 = cell_to_days(d_col[*p.end], uid);
        if (t1 <= t0) {
            throw Error("uid " + uid + ": end date does not follow start date (" +
                        std::to_string(t0) + " -> " + std::to_string(t1) + ")");
        }
        QalyRecord rec;
        rec.uid = uid;
        rec.u_start = u0;
        rec.u_end = u1;
        rec.days = t1 - t0;
        rec.qalys = trapezoid_qalys(u0, u1, rec.days);
        out.records.push_back(std::move(rec));
    }
    return out;
}

} // namespace chem
