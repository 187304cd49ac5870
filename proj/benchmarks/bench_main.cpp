#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include <secscore/cvss.hpp>
#include <secscore/distributions.hpp>
#include <secscore/exploit_model.hpp>
#include <secscore/fitting.hpp>
#include <secscore/prioritizer.hpp>

using namespace secscore;

namespace {

const AlParams kGeneral{-2.857e-01, 2.179e+01, 9.075e-01};

std::vector<double> sample_al(const AlParams& p, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(1e-12, 1.0 - 1e-12);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(al_quantile(u(rng), p));
    return out;
}

void bm_parse_and_base(benchmark::State& state) {
    const std::string text = "CVSS:3.1/AV:N/AC:L/PR:N/UI:R/S:C/C:H/I:L/A:N/E:P/RL:W/RC:R";
    for (auto _ : state) {
        const auto v = parse_vector(text);
        benchmark::DoNotOptimize(base_score(v).base);
    }
}
BENCHMARK(bm_parse_and_base);

void bm_al_cdf(benchmark::State& state) {
    double t = -40.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(al_cdf(t, kGeneral));
        t += 0.01;
        if (t > 40.0) t = -40.0;
    }
}
BENCHMARK(bm_al_cdf);

void bm_al_quantile(benchmark::State& state) {
    double u = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(al_quantile(u, kGeneral));
        u += 1e-4;
        if (u >= 1.0) u = 1e-6;
    }
}
BENCHMARK(bm_al_quantile);

void bm_maturity(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exploit_maturity(t, kGeneral, {}));
        t += 0.05;
        if (t > 60.0) t = 0.0;
    }
}
BENCHMARK(bm_maturity);

void bm_fit_al(benchmark::State& state) {
    const auto sample = sample_al(kGeneral, std::size_t(state.range(0)), 1234);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_al(sample));
    }
}
BENCHMARK(bm_fit_al)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void bm_rank(benchmark::State& state) {
    ModelRegistry reg;
    CategoryFits fits;
    fits.n = 100;
    FitResult al;
    al.family = Family::Al;
    al.params = kGeneral;
    al.converged = true;
    fits.fits = {al};
    reg.entries.emplace(CategoryKey{CategoryKind::General, "all"}, fits);

    const auto vector = parse_vector("CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:N/A:N");
    std::vector<InventoryItem> items(std::size_t(state.range(0)));
    for (std::size_t i = 0; i < items.size(); ++i) {
        items[i].cve_id = "CVE-2020-" + std::to_string(1000 + i);
        items[i].vector = vector;
        items[i].cve_date = parse_date("2020-01-01") + std::chrono::days(i % 365);
    }
    const Date query = parse_date("2021-06-01");
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(items, query, reg).ranked.size());
    }
}
BENCHMARK(bm_rank)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
