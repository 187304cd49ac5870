#include "secscore/exploit_model.hpp"

#include <algorithm>

#include "secscore/errors.hpp"

namespace secscore {

bool valid(const MaturityBounds& b) {
    return b.e_min > 0.0 && b.e_min <= b.e_max && b.e_max <= 1.0;
}

double exploit_maturity(double t_weeks, const AlParams& p, const MaturityBounds& b) {
    return b.e_min + (b.e_max - b.e_min) * al_cdf(t_weeks, p);
}

double secscore_temporal(double base, double rc_weight, double rl_weight, double t_weeks,
                         const AlParams& p, const MaturityBounds& b) {
    return roundup(base * rc_weight * rl_weight) * exploit_maturity(t_weeks, p, b);
}

double secscore_temporal_pinned(double base, double rc_weight, double rl_weight,
                                const MaturityBounds& b) {
    return roundup(base * rc_weight * rl_weight) * b.e_max;
}

double secscore_environmental(const CvssV31Vector& v, double t_weeks, const AlParams& p,
                              const MaturityBounds& b, bool pinned) {
    const EnvBreakdown e = environmental_score(v);
    if (e.impact_m <= 0.0) return 0.0;

    const Scope ms = v.scope_m.value_or(v.scope);
    const double sum = e.impact_m + e.exploitability_m;
    const double inner = ms == Scope::Unchanged ? roundup(std::min(sum, 10.0))
                                                : roundup(std::min(1.08 * sum, 10.0));
    const double rcrl = CvssConstants::rc(v.rc) * CvssConstants::rl(v.rl);
    const double e_s = pinned ? b.e_max : exploit_maturity(t_weeks, p, b);
    return roundup(inner * rcrl) * e_s;
}

double v4_e_min(const V4ScorePair& pair) {
    if (pair.score_eq5_attacked <= 0.0) {
        throw DegenerateScore("v4 attacked score must be positive");
    }
    return pair.score_eq5_unreported / pair.score_eq5_attacked;
}

double secscore_v4(const V4ScorePair& pair, double t_weeks, const AlParams& p) {
    const MaturityBounds b{v4_e_min(pair), 1.0};
    return pair.score_eq5_attacked * exploit_maturity(t_weeks, p, b);
}

MaturityKey maturity_key(double t_weeks, const AlParams& p, bool pinned) {
    if (pinned) return {true, 0.0, t_weeks};
    return {false, al_log_cdf(t_weeks, p), t_weeks};
}

int compare_maturity_exact(double t1, const AlParams& p1, bool pinned1, double t2,
                           const AlParams& p2, bool pinned2) {
    const MaturityKey a = maturity_key(t1, p1, pinned1);
    const MaturityKey b = maturity_key(t2, p2, pinned2);
    if (a.pinned != b.pinned) return a.pinned ? 1 : -1;
    if (a.pinned) return 0;
    if (a.log_cdf != b.log_cdf) return a.log_cdf > b.log_cdf ? 1 : -1;
    if (a.t != b.t) return a.t > b.t ? 1 : -1;
    return 0;
}

}  // namespace secscore
