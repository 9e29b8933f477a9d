#include "chem/models.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>

#include "chem/error.hpp"

namespace chem {

std::string to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::ols: return "ols";
    case FamilyKind::glm_gaussian_log: return "glm_gaussian_log";
    case FamilyKind::glm_gamma_log: return "glm_gamma_log";
    case FamilyKind::ols_logit_transform: return "ols_logit_transform";
    case FamilyKind::ols_cloglog_transform: return "ols_cloglog_transform";
    case FamilyKind::lmm_random_intercept: return "lmm_random_intercept";
    }
    return "ols";
}

FamilyKind family_from_string(const std::string& s) {
    if (s == "ols") return FamilyKind::ols;
    if (s == "glm_gaussian_log") return FamilyKind::glm_gaussian_log;
    if (s == "glm_gamma_log") return FamilyKind::glm_gamma_log;
    if (s == "ols_logit_transform") return FamilyKind::ols_logit_transform;
    if (s == "ols_cloglog_transform") return FamilyKind::ols_cloglog_transform;
    if (s == "lmm_random_intercept") return FamilyKind::lmm_random_intercept;
    throw Error("unknown model family '" + s + "'");
}

Design Design::with_intercept(std::size_t n) {
    Design d;
    d.names.push_back("(intercept)");
    d.columns.emplace_back(n, 1.0);
    return d;
}

void Design::add(std::string name, std::vector<double> col) {
    if (!columns.empty() && col.size() != n_rows()) {
        throw Error("design column '" + name + "' has " + std::to_string(col.size()) +
                    " rows, expected " + std::to_string(n_rows()));
    }
    names.push_back(std::move(name));
    columns.push_back(std::move(col));
}

double logit(double p) { return std::log(p / (1.0 - p)); }
double cloglog(double p) { return std::log(-std::log(1.0 - p)); }

double inverse_link(FamilyKind kind, double eta) {
    switch (kind) {
    case FamilyKind::ols:
    case FamilyKind::lmm_random_intercept:
        return eta;
    case FamilyKind::glm_gaussian_log:
    case FamilyKind::glm_gamma_log:
        return std::exp(eta);
    case FamilyKind::ols_logit_transform:
        return 1.0 / (1.0 + std::exp(-eta));
    case FamilyKind::ols_cloglog_transform:
        return 1.0 - std::exp(-std::exp(eta));
    }
    return eta;
}

namespace {

Eigen::MatrixXd to_eigen(const Design& X) {
    const auto n = static_cast<Eigen::Index>(X.n_rows());
    const auto p = static_cast<Eigen::Index>(X.n_cols());
    Eigen::MatrixXd M(n, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            M(i, j) = X.columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
    }
    return M;
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Rank-revealing solve; names a collinear column on rank deficiency.
Eigen::VectorXd solve_full_rank(const Eigen::MatrixXd& M, const Eigen::VectorXd& b,
                                const Design& X) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
    qr.setThreshold(1e-10);
    if (qr.rank() < M.cols()) {
        // Name the first column lying in the span of the ones before it.
        for (Eigen::Index j = 1; j < M.cols(); ++j) {
            Eigen::ColPivHouseholderQR<Eigen::MatrixXd> head(M.topLeftCorner(j + 1, j + 1));
            head.setThreshold(1e-10);
            if (head.rank() <= j) {
                throw Error("design matrix is rank deficient: column '" +
                            X.names[static_cast<size_t>(j)] +
                            "' is collinear with earlier columns");
            }
        }
        throw Error("design matrix is rank deficient");
    }
    return qr.solve(b);
}

std::vector<double> std_vec(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

} // namespace

FittedModel fit_ols(const std::vector<double>& y, const Design& X) {
    const size_t n = y.size();
    const size_t p = X.n_cols();
    if (X.n_rows() != n) throw Error("response and design row counts differ");
    if (n <= p) {
        throw Error("need n > p for OLS (n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                    ")");
    }
    Eigen::MatrixXd M = to_eigen(X);
    Eigen::VectorXd yy = to_eigen(y);
    Eigen::VectorXd beta = solve_full_rank(M, yy, X);

    Eigen::VectorXd resid = yy - M * beta;
    double sigma2 = resid.squaredNorm() / static_cast<double>(n - p);

    Eigen::MatrixXd xtx_inv =
        (M.transpose() * M).ldlt().solve(Eigen::MatrixXd::Identity(
            static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)));

    FittedModel m;
    m.family.kind = FamilyKind::ols;
    m.coef_names = X.names;
    m.coefficients = std_vec(beta);
    m.coefficient_se.resize(p);
    for (size_t j = 0; j < p; ++j) {
        m.coefficient_se[j] = std::sqrt(sigma2 * xtx_inv(static_cast<Eigen::Index>(j),
                                                         static_cast<Eigen::Index>(j)));
    }
    m.sigma = std::sqrt(sigma2);
    m.n_train = n;
    m.converged = true;
    m.iterations = 1;
    return m;
}

FittedModel fit_glm_irls(const std::vector<double>& y, const Design& X, FamilyKind family,
                         int max_iter, double tol) {
    if (family != FamilyKind::glm_gaussian_log && family != FamilyKind::glm_gamma_log) {
        throw Error("fit_glm_irls supports glm_gaussian_log and glm_gamma_log only");
    }
    const size_t n = y.size();
    const size_t p = X.n_cols();
    if (X.n_rows() != n) throw Error("response and design row counts differ");
    if (n <= p) throw Error("need n > p for IRLS");
    for (size_t i = 0; i < n; ++i) {
        if (y[i] <= 0.0) {
            throw Error("row " + std::to_string(i + 1) +
                        ": response must be positive under log link");
        }
    }

    Eigen::MatrixXd M = to_eigen(X);
    Eigen::VectorXd yy = to_eigen(y);
    Eigen::VectorXd eta = yy.array().log();
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));

    bool converged = false;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        Eigen::VectorXd mu = eta.array().exp();
        // Working response z = eta + (y - mu)/mu for the log link; IRLS
        // weights are mu^2 (gaussian) or 1 (gamma).
        Eigen::VectorXd z = eta.array() + (yy - mu).array() / mu.array();
        Eigen::VectorXd w = family == FamilyKind::glm_gaussian_log
                                ? Eigen::VectorXd(mu.array().square())
                                : Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
        Eigen::VectorXd sw = w.array().sqrt();
        Eigen::MatrixXd Mw = sw.asDiagonal() * M;
        Eigen::VectorXd zw = sw.asDiagonal() * z;
        Eigen::VectorXd beta_new = solve_full_rank(Mw, zw, X);

        double max_rel = 0;
        for (Eigen::Index j = 0; j < beta_new.size(); ++j) {
            double denom = std::max(1e-8, std::abs(beta_new(j)));
            max_rel = std::max(max_rel, std::abs(beta_new(j) - beta(j)) / denom);
        }
        beta = beta_new;
        eta = M * beta;
        if (iter > 0 && max_rel < tol) {
            converged = true;
            ++iter;
            break;
        }
    }

    Eigen::VectorXd mu = eta.array().exp();
    // Pearson dispersion; V(mu) = 1 (gaussian) or mu^2 (gamma).
    double pearson = 0;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
        double v = family == FamilyKind::glm_gaussian_log ? 1.0 : mu(i) * mu(i);
        pearson += (yy(i) - mu(i)) * (yy(i) - mu(i)) / v;
    }
    double dispersion = pearson / static_cast<double>(n - p);

    Eigen::VectorXd w = family == FamilyKind::glm_gaussian_log
                            ? Eigen::VectorXd(mu.array().square())
                            : Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    Eigen::MatrixXd info = M.transpose() * w.asDiagonal() * M;
    Eigen::MatrixXd cov = info.ldlt().solve(Eigen::MatrixXd::Identity(
                              static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p))) *
                          dispersion;

    FittedModel m;
    m.family.kind = family;
    m.family.max_iter = max_iter;
    m.family.tol = tol;
    m.coef_names = X.names;
    m.coefficients = std_vec(beta);
    m.coefficient_se.resize(p);
    for (size_t j = 0; j < p; ++j) {
        m.coefficient_se[j] = std::sqrt(cov(static_cast<Eigen::Index>(j),
                                            static_cast<Eigen::Index>(j)));
    }
    m.sigma = std::sqrt(dispersion);
    m.n_train = n;
    m.converged = converged;
    m.iterations = iter;
    return m;
}

FittedModel fit_transformed_ols(const std::vector<double>& y, const Design& X,
                                FamilyKind transform, double epsilon) {
    if (transform != FamilyKind::ols_logit_transform &&
        transform != FamilyKind::ols_cloglog_transform) {
        throw Error("fit_transformed_ols supports logit and cloglog transforms only");
    }
    if (epsilon <= 0.0 || epsilon > 0.01) {
        throw Error("epsilon must be in (0, 0.01]");
    }
    std::vector<double> z(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0.0 || y[i] > 1.0) {
            throw Error("row " + std::to_string(i + 1) + ": response " + std::to_string(y[i]) +
                        " outside [0, 1]");
        }
        double clamped = std::min(1.0 - epsilon, std::max(epsilon, y[i]));
        z[i] = transform == FamilyKind::ols_logit_transform ? logit(clamped) : cloglog(clamped);
    }
    FittedModel m = fit_ols(z, X);
    m.family.kind = transform;
    m.epsilon = epsilon;
    return m;
}

FittedModel fit_lmm_random_intercept(const std::vector<double>& y, const Design& X,
                                     const std::vector<std::string>& cluster, int max_iter,
                                     double tol) {
    const size_t n = y.size();
    const size_t p = X.n_cols();
    if (X.n_rows() != n || cluster.size() != n) {
        throw Error("response, design, and cluster lengths differ");
    }
    if (n <= p) throw Error("need n > p for the mixed model");

    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[cluster[i]].push_back(i);
    const size_t q = groups.size();
    if (q < 2) {
        throw Error("mixed model needs at least 2 clusters; use fit_ols for a single cluster");
    }

    Eigen::MatrixXd M = to_eigen(X);
    Eigen::VectorXd yy = to_eigen(y);

    // Initialize from OLS.
    Eigen::VectorXd beta = solve_full_rank(M, yy, X);
    Eigen::VectorXd resid = yy - M * beta;
    double sig_e = resid.squaredNorm() / static_cast<double>(n - p);
    double sig_b = sig_e * 0.5;

    auto log_lik = [&](const Eigen::VectorXd& b, double se, double sb) {
        double ll = 0;
        Eigen::VectorXd r = yy - M * b;
        for (const auto& [key, rows] : groups) {
            const double nj = static_cast<double>(rows.size());
            double sum_r = 0, ss_r = 0;
            for (size_t i : rows) {
                double ri = r(static_cast<Eigen::Index>(i));
                sum_r += ri;
                ss_r += ri * ri;
            }
            double denom = se + nj * sb;
            // log|V_j| and quadratic form for V_j = se*I + sb*J
            ll += -0.5 * (nj * std::log(2.0 * M_PI) + (nj - 1.0) * std::log(se) +
                          std::log(denom) + ss_r / se - sb * sum_r * sum_r / (se * denom));
        }
        return ll;
    };

    double prev_ll = log_lik(beta, sig_e, sig_b);
    bool converged = false;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        // E-step: posterior mean/variance of each random intercept.
        Eigen::VectorXd r = yy - M * beta;
        Eigen::VectorXd offset = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        double sum_m2v = 0;
        double sse = 0;
        for (const auto& [key, rows] : groups) {
            const double nj = static_cast<double>(rows.size());
            double sum_r = 0;
            for (size_t i : rows) sum_r += r(static_cast<Eigen::Index>(i));
            double v = sig_b > 0 ? (sig_b * sig_e) / (sig_e + nj * sig_b) : 0.0;
            double mean = sig_b > 0 ? sig_b * sum_r / (sig_e + nj * sig_b) : 0.0;
            sum_m2v += mean * mean + v;
            for (size_t i : rows) {
                offset(static_cast<Eigen::Index>(i)) = mean;
                double e = r(static_cast<Eigen::Index>(i)) - mean;
                sse += e * e;
            }
            sse += nj * v;
        }
        // M-step
        double sig_b_new = std::max(0.0, sum_m2v / static_cast<double>(q));
        double sig_e_new = sse / static_cast<double>(n);
        Eigen::VectorXd beta_new = solve_full_rank(M, yy - offset, X);

        double ll = log_lik(beta_new, sig_e_new, sig_b_new);
        beta = beta_new;
        sig_e = sig_e_new;
        sig_b = sig_b_new;
        if (std::abs(ll - prev_ll) < tol * (std::abs(prev_ll) + 1.0)) {
            converged = true;
            prev_ll = ll;
            ++iter;
            break;
        }
        prev_ll = ll;
    }

    // Fixed-effect covariance from the GLS information matrix at the estimates.
    Eigen::MatrixXd info = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p),
                                                 static_cast<Eigen::Index>(p));
    for (const auto& [key, rows] : groups) {
        const double nj = static_cast<double>(rows.size());
        Eigen::MatrixXd Xj(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(p));
        for (size_t k = 0; k < rows.size(); ++k) {
            Xj.row(static_cast<Eigen::Index>(k)) = M.row(static_cast<Eigen::Index>(rows[k]));
        }
        Eigen::VectorXd colsum = Xj.colwise().sum();
        double denom = sig_e + nj * sig_b;
        info += Xj.transpose() * Xj / sig_e - (sig_b / (sig_e * denom)) * colsum * colsum.transpose();
    }
    Eigen::MatrixXd cov = info.ldlt().solve(Eigen::MatrixXd::Identity(
        static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)));

    FittedModel m;
    m.family.kind = FamilyKind::lmm_random_intercept;
    m.family.max_iter = max_iter;
    m.family.tol = tol;
    m.coef_names = X.names;
    m.coefficients = std_vec(beta);
    m.coefficient_se.resize(p);
    for (size_t j = 0; j < p; ++j) {
        m.coefficient_se[j] = std::sqrt(std::max(0.0, cov(static_cast<Eigen::Index>(j),
                                                          static_cast<Eigen::Index>(j))));
    }
    m.sigma = std::sqrt(sig_e);
    m.random_intercept_var = sig_b;
    m.n_train = n;
    m.converged = converged;
    m.iterations = iter;
    return m;
}

FittedModel fit_family(const ModelFamily& family, const std::vector<double>& y, const Design& X,
                       const std::vector<std::string>& cluster) {
    switch (family.kind) {
    case FamilyKind::ols:
        return fit_ols(y, X);
    case FamilyKind::glm_gaussian_log:
    case FamilyKind::glm_gamma_log:
        return fit_glm_irls(y, X, family.kind, family.max_iter, family.tol);
    case FamilyKind::ols_logit_transform:
    case FamilyKind::ols_cloglog_transform:
        return fit_transformed_ols(y, X, family.kind);
    case FamilyKind::lmm_random_intercept:
        return fit_lmm_random_intercept(y, X, cluster, family.max_iter, family.tol);
    }
    throw Error("unknown model family");
}

std::vector<double> model_predict(const FittedModel& m, const Design& X) {
    if (X.n_cols() != m.coefficients.size()) {
        throw Error("design has " + std::to_string(X.n_cols()) + " columns, model expects " +
                    std::to_string(m.coefficients.size()));
    }
    const size_t n = X.n_rows();
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        double eta = 0;
        for (size_t j = 0; j < X.n_cols(); ++j) {
            eta += m.coefficients[j] * X.columns[j][i];
        }
        out[i] = inverse_link(m.family.kind, eta);
    }
    return out;
}

} // namespace chem
