#include "secscore/fitting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "secscore/errors.hpp"
#include "secscore/nelder_mead.hpp"

namespace secscore {

EmpiricalCdf empirical_cdf(std::vector<double> samples) {
    if (samples.empty()) throw EmptySample("empirical_cdf: no samples");
    std::sort(samples.begin(), samples.end());
    EmpiricalCdf ecdf;
    ecdf.n = samples.size();
    const double n = double(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
        ecdf.t.push_back(samples[i]);
        ecdf.f.push_back(double(i + 1) / n);
    }
    return ecdf;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Al: return "al";
        case Family::Laplace: return "laplace";
        case Family::SkewNormal: return "skew_normal";
    }
    return "al";
}

std::optional<Family> family_from(std::string_view name) {
    if (name == "al") return Family::Al;
    if (name == "laplace") return Family::Laplace;
    if (name == "skew_normal") return Family::SkewNormal;
    return {};
}

namespace {

double median_of_sorted(const std::vector<double>& s) {
    const std::size_t n = s.size();
    return n % 2 ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

struct LaplaceClosedForm {
    double mu;
    double b;
};

LaplaceClosedForm laplace_closed_form(const std::vector<double>& samples) {
    if (samples.empty()) throw EmptySample("fit: no samples");
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const double mu = median_of_sorted(sorted);
    double abs_dev = 0.0;
    for (double x : sorted) abs_dev += std::abs(x - mu);
    const double b = abs_dev / double(sorted.size());
    if (b <= 0.0) throw DegenerateSample("fit: sample has no spread");
    return {mu, b};
}

// Runs the simplex search, then once more from the found point with finer
// steps when budget remains; NM can stall on a collapsed simplex otherwise.
SimplexResult minimize_with_restart(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, std::vector<double> steps, const FitOptions& options) {
    const SimplexOptions simplex_options{options.tolerance, options.max_evaluations};
    SimplexResult first = nelder_mead(objective, start, steps, simplex_options);
    const int remaining = options.max_evaluations - first.evaluations;
    if (remaining < int(8 * (start.size() + 1))) return first;

    for (double& s : steps) s *= 0.1;
    SimplexResult second = nelder_mead(objective, first.x, steps,
                                       {options.tolerance, remaining});
    second.evaluations += first.evaluations;
    if (second.value > first.value) {
        second.x = first.x;
        second.value = first.value;
    }
    return second;
}

}  // namespace

FitResult fit_laplace(const std::vector<double>& samples) {
    const LaplaceClosedForm cf = laplace_closed_form(samples);
    const LaplaceParams params{cf.mu, cf.b};
    FitResult result;
    result.family = Family::Laplace;
    result.params = params;
    result.n = samples.size();
    result.converged = true;
    result.log_likelihood = -double(samples.size()) * (std::log(2.0 * cf.b) + 1.0);
    return result;
}

FitResult fit_al(const std::vector<double>& samples, std::optional<AlParams> init,
                 const FitOptions& options) {
    const LaplaceClosedForm cf = laplace_closed_form(samples);
    AlParams start = init.value_or(AlParams{cf.mu, 1.0 / cf.b, 1.0});
    if (!valid(start)) throw Error("fit_al: invalid init");

    auto objective = [&samples](const std::vector<double>& x) {
        const AlParams p{x[0], std::exp(x[1]), std::exp(x[2])};
        double nll = 0.0;
        for (double s : samples) nll -= al_log_pdf(s, p);
        return nll;
    };

    const std::vector<double> x0 = {start.mu, std::log(start.lambda), std::log(start.kappa)};
    const std::vector<double> steps = {std::max(0.25 * cf.b, 1e-3), 0.25, 0.25};
    const SimplexResult r = minimize_with_restart(objective, x0, steps, options);

    FitResult result;
    result.family = Family::Al;
    result.params = AlParams{r.x[0], std::exp(r.x[1]), std::exp(r.x[2])};
    result.log_likelihood = -r.value;
    result.n = samples.size();
    result.converged = r.converged;
    return result;
}

FitResult fit_skewnormal(const std::vector<double>& samples, const FitOptions& options) {
    if (samples.size() < 2) throw EmptySample("fit_skewnormal: need at least two samples");
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / samples.size();
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / double(samples.size() - 1));
    if (sd <= 0.0) throw DegenerateSample("fit_skewnormal: sample has no spread");

    auto objective = [&samples](const std::vector<double>& x) {
        const SkewNormalParams p{x[0], std::exp(x[1]), x[2]};
        double nll = 0.0;
        for (double s : samples) nll -= skewnormal_log_pdf(s, p);
        return nll;
    };

    const std::vector<double> x0 = {mean, std::log(sd), 0.0};
    const std::vector<double> steps = {std::max(0.25 * sd, 1e-3), 0.25, 0.5};
    const SimplexResult r = minimize_with_restart(objective, x0, steps, options);

    FitResult result;
    result.family = Family::SkewNormal;
    result.params = SkewNormalParams{r.x[0], std::exp(r.x[1]), r.x[2]};
    result.log_likelihood = -r.value;
    result.n = samples.size();
    result.converged = r.converged;
    return result;
}

double model_cdf(const FitResult& fit, double t) {
    if (const auto* al = std::get_if<AlParams>(&fit.params)) return al_cdf(t, *al);
    if (const auto* lp = std::get_if<LaplaceParams>(&fit.params)) return laplace_cdf(t, *lp);
    return skewnormal_cdf(t, std::get<SkewNormalParams>(fit.params));
}

double model_mse(const FitResult& fit, const EmpiricalCdf& ecdf) {
    if (ecdf.t.empty()) throw EmptySample("model_mse: empty ECDF");
    double sum = 0.0;
    for (std::size_t i = 0; i < ecdf.t.size(); ++i) {
        const double d = model_cdf(fit, ecdf.t[i]) - ecdf.f[i];
        sum += d * d;
    }
    return sum / double(ecdf.t.size());
}

const FitResult* find_fit(const ModelRegistry& reg, const CategoryKey& key, Family family) {
    const auto it = reg.entries.find(key);
    if (it == reg.entries.end()) return nullptr;
    for (const FitResult& fit : it->second.fits) {
        if (fit.family == family) return &fit;
    }
    return nullptr;
}

const AlParams* al_params_for(const ModelRegistry& reg, const CategoryKey& key) {
    const FitResult* fit = find_fit(reg, key, Family::Al);
    if (!fit) return nullptr;
    return std::get_if<AlParams>(&fit->params);
}

ModelRegistry fit_all(const std::map<CategoryKey, DelaySampleSet>& categorized,
                      const FitOptions& options, unsigned threads) {
    struct Slot {
        const CategoryKey* key;
        const DelaySampleSet* set;
        CategoryFits fits;
        std::string error;
    };
    std::vector<Slot> slots;
    slots.reserve(categorized.size());
    for (const auto& [key, set] : categorized) slots.push_back({&key, &set, {}, {}});

    auto fit_one = [&options](Slot& slot) {
        try {
            const EmpiricalCdf ecdf = empirical_cdf(slot.set->samples);
            CategoryFits out;
            out.n = slot.set->samples.size();
            FitResult al = fit_al(slot.set->samples, {}, options);
            FitResult lp = fit_laplace(slot.set->samples);
            FitResult sn = fit_skewnormal(slot.set->samples, options);
            for (FitResult* fit : {&al, &lp, &sn}) {
                fit->mse = model_mse(*fit, ecdf);
            }
            out.best_family = Family::Al;
            if (lp.mse < al.mse) out.best_family = Family::Laplace;
            if (sn.mse < al.mse && sn.mse < lp.mse) out.best_family = Family::SkewNormal;
            out.fits = {std::move(al), std::move(lp), std::move(sn)};
            slot.fits = std::move(out);
        } catch (const Error& e) {
            slot.error = e.what();
        }
    };

    unsigned worker_count = threads ? threads : std::thread::hardware_concurrency();
    worker_count = std::max(1u, std::min<unsigned>(worker_count, slots.size()));
    if (worker_count <= 1) {
        for (Slot& slot : slots) fit_one(slot);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&]() {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= slots.size()) return;
                    fit_one(slots[i]);
                }
            });
        }
        for (std::thread& worker : workers) worker.join();
    }

    ModelRegistry reg;
    for (Slot& slot : slots) {
        if (!slot.error.empty()) {
            reg.failures.emplace_back(*slot.key, slot.error);
        } else {
            reg.entries.emplace(*slot.key, std::move(slot.fits));
        }
    }
    return reg;
}

}  // namespace secscore
