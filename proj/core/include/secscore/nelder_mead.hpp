#pragma once

#include <functional>
#include <vector>

namespace secscore {

struct SimplexOptions {
    double tolerance = 1e-8;    // convergence: simplex diameter below this
    int max_evaluations = 10000;
};

struct SimplexResult {
    std::vector<double> x;
    double value;
    int evaluations = 0;
    bool converged = false;
};

// Derivative-free simplex minimization. Deterministic: no randomness, ties
// resolved by vertex index. steps gives the initial per-dimension offsets.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& start, const std::vector<double>& steps,
                          const SimplexOptions& options = {});

}  // namespace secscore
