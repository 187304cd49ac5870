#include "secscore/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secscore/errors.hpp"

namespace secscore {

namespace {

double diameter(const std::vector<std::vector<double>>& verts) {
    double d = 0.0;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts[0].size(); ++j) {
            d = std::max(d, std::abs(verts[i][j] - verts[0][j]));
        }
    }
    return d;
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& start, const std::vector<double>& steps,
                          const SimplexOptions& options) {
    const std::size_t n = start.size();
    if (n == 0 || steps.size() != n) throw Error("nelder_mead: bad start/steps");

    SimplexResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        const double v = objective(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<std::vector<double>> verts(n + 1, start);
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i < n; ++i) verts[i + 1][i] += steps[i];
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(verts[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);

    while (result.evaluations < options.max_evaluations) {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        {
            std::vector<std::vector<double>> v2(n + 1);
            std::vector<double> f2(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                v2[i] = verts[order[i]];
                f2[i] = values[order[i]];
            }
            verts.swap(v2);
            values.swap(f2);
        }

        if (diameter(verts) < options.tolerance) {
            result.converged = true;
            break;
        }

        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += verts[i][j];
            centroid[j] = s / double(n);
        }

        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - verts[n][j]);
        const double fr = eval(xr);

        if (fr < values[0]) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - verts[n][j]);
            const double fe = eval(xe);
            if (fe < fr) {
                verts[n] = xe;
                values[n] = fe;
            } else {
                verts[n] = xr;
                values[n] = fr;
            }
        } else if (fr < values[n - 1]) {
            verts[n] = xr;
            values[n] = fr;
        } else {
            const bool outside = fr < values[n];
            const std::vector<double>& far = outside ? xr : verts[n];
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (far[j] - centroid[j]);
            const double fc = eval(xc);
            if (fc < (outside ? fr : values[n])) {
                verts[n] = xc;
                values[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        verts[i][j] = verts[0][j] + 0.5 * (verts[i][j] - verts[0][j]);
                    }
                    values[i] = eval(verts[i]);
                    if (result.evaluations >= options.max_evaluations) break;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (values[i] < values[best]) best = i;
    }
    result.x = verts[best];
    result.value = values[best];
    return result;
}

}  // namespace secscore
