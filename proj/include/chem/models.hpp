#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chem {

enum class FamilyKind {
    ols,
    glm_gaussian_log,
    glm_gamma_log,
    ols_logit_transform,
    ols_cloglog_transform,
    lmm_random_intercept,
};

std::string to_string(FamilyKind k);
FamilyKind family_from_string(const std::string& s);

struct ModelFamily {
    FamilyKind kind = FamilyKind::ols;
    int max_iter = 200;
    double tol = 1e-10;
};

// Column-major design matrix; callers prepend the intercept column.
struct Design {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    std::size_t n_rows() const { return columns.empty() ? 0 : columns.front().size(); }
    std::size_t n_cols() const { return columns.size(); }

    static Design with_intercept(std::size_t n);
    void add(std::string name, std::vector<double> col);
};

// Record-free fit result: coefficients and scalar metadata only.
struct FittedModel {
    ModelFamily family;
    std::vector<std::string> coef_names;
    std::vector<double> coefficients;
    std::vector<double> coefficient_se;
    double sigma = 0;                 // residual scale, where defined
    double random_intercept_var = 0;  // lmm only
    double epsilon = 0;               // transform clamp, transform families only
    std::size_t n_train = 0;
    bool converged = true;
    int iterations = 0;
};

FittedModel fit_ols(const std::vector<double>& y, const Design& X);

FittedModel fit_glm_irls(const std::vector<double>& y, const Design& X, FamilyKind family,
                         int max_iter = 200, double tol = 1e-10);

FittedModel fit_transformed_ols(const std::vector<double>& y, const Design& X,
                                FamilyKind transform, double epsilon = 0.005);

FittedModel fit_lmm_random_intercept(const std::vector<double>& y, const Design& X,
                                     const std::vector<std::string>& cluster,
                                     int max_iter = 500, double tol = 1e-10);

// Dispatches on family.kind; lmm ignores cluster when fitting is not clustered.
FittedModel fit_family(const ModelFamily& family, const std::vector<double>& y, const Design& X,
                       const std::vector<std::string>& cluster);

// Linear predictor through the family's inverse link/transform.
std::vector<double> model_predict(const FittedModel& m, const Design& X);

double inverse_link(FamilyKind kind, double eta);

// Transforms used by the transformed-OLS families.
double logit(double p);
double cloglog(double p);

} // namespace chem
