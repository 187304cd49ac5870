#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "secscore/dataset.hpp"
#include "secscore/distributions.hpp"

namespace secscore {

struct EmpiricalCdf {
    std::vector<double> t;  // strictly increasing support (order statistics)
    std::vector<double> f;  // i/n at the highest index of each duplicate run
    std::size_t n = 0;
};

// Throws EmptySample on empty input.
EmpiricalCdf empirical_cdf(std::vector<double> samples);

enum class Family { Al, Laplace, SkewNormal };

std::string_view family_name(Family f);
std::optional<Family> family_from(std::string_view name);

using FamilyParams = std::variant<AlParams, LaplaceParams, SkewNormalParams>;

struct FitResult {
    Family family = Family::Al;
    FamilyParams params;
    double log_likelihood = 0.0;
    double mse = 0.0;
    std::size_t n = 0;
    bool converged = false;
};

struct FitOptions {
    double tolerance = 1e-8;
    int max_evaluations = 10000;
};

// Closed form: location = median, scale = mean absolute deviation.
FitResult fit_laplace(const std::vector<double>& samples);

// Simplex MLE over (mu, log lambda, log kappa); init defaults to the Laplace
// closed form at kappa = 1. Non-convergence is reported, not thrown.
FitResult fit_al(const std::vector<double>& samples, std::optional<AlParams> init = {},
                 const FitOptions& options = {});

// Simplex MLE over (xi, log omega, alpha); init from sample moments.
FitResult fit_skewnormal(const std::vector<double>& samples, const FitOptions& options = {});

double model_cdf(const FitResult& fit, double t);

// Mean squared gap between the fitted CDF and the ECDF over its support.
double model_mse(const FitResult& fit, const EmpiricalCdf& ecdf);

struct CategoryFits {
    std::size_t n = 0;
    std::vector<FitResult> fits;  // at most one per family
    Family best_family = Family::Al;
};

struct ModelRegistry {
    int schema_version = 1;
    std::string snapshot_id;
    std::string created;
    std::map<CategoryKey, CategoryFits> entries;
    std::vector<std::pair<CategoryKey, std::string>> failures;
};

const FitResult* find_fit(const ModelRegistry& reg, const CategoryKey& key, Family family);
const AlParams* al_params_for(const ModelRegistry& reg, const CategoryKey& key);

// Fits all three families per category; MSE ties go to the AL family.
// threads = 0 picks hardware concurrency. Output independent of thread count.
ModelRegistry fit_all(const std::map<CategoryKey, DelaySampleSet>& categorized,
                      const FitOptions& options = {}, unsigned threads = 0);

void save_registry(const ModelRegistry& reg, const std::filesystem::path& path);
ModelRegistry load_registry(const std::filesystem::path& path);

// RFC 3339 timestamp: honors SOURCE_DATE_EPOCH for reproducible output.
std::string registry_timestamp();

}  // namespace secscore
