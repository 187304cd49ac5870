#pragma once

#include "secscore/cvss.hpp"
#include "secscore/distributions.hpp"

namespace secscore {

struct MaturityBounds {
    double e_min = 0.91;
    double e_max = 1.0;
    bool operator==(const MaturityBounds&) const = default;
};

bool valid(const MaturityBounds& b);

// E_S(t) = e_min + (e_max - e_min) * F(t); t in weeks since the CVE date,
// negative t allowed (exploit code preceding publication).
double exploit_maturity(double t_weeks, const AlParams& p, const MaturityBounds& b);

// roundup(base * rc_weight * rl_weight) * E_S(t); the maturity multiplier
// stays outside the rounding so sub-decimal ordering survives.
double secscore_temporal(double base, double rc_weight, double rl_weight, double t_weeks,
                         const AlParams& p, const MaturityBounds& b);

// Same shape with E_S pinned at e_max (exploit known to exist).
double secscore_temporal_pinned(double base, double rc_weight, double rl_weight,
                                const MaturityBounds& b);

// Environmental composition: the modified-impact score is rounded without any
// exploit factor, then scaled by the unrounded E_S(t), or by e_max when the
// exploit is pinned as known.
double secscore_environmental(const CvssV31Vector& v, double t_weeks, const AlParams& p,
                              const MaturityBounds& b, bool pinned = false);

struct V4ScorePair {
    double score_eq5_attacked;    // CVSS v4 score at EQ5 = 0
    double score_eq5_unreported;  // CVSS v4 score at EQ5 = 2
};

// Lower maturity bound for v4: unreported / attacked. Throws DegenerateScore
// when the attacked score is zero.
double v4_e_min(const V4ScorePair& pair);

double secscore_v4(const V4ScorePair& pair, double t_weeks, const AlParams& p);

// Per-item ordering key for exploit maturity: (pinned, log F(t), t), compared
// lexicographically. Being a pure function of one item, the induced order is
// transitive; the trailing t component resolves same-parameter items exactly
// even where log F collapses in doubles. Pinned items are all F = 1 exactly,
// so they compare equal to each other and above everything else.
struct MaturityKey {
    bool pinned = false;
    double log_cdf = 0.0;
    double t = 0.0;
};

MaturityKey maturity_key(double t_weeks, const AlParams& p, bool pinned);

// +1 when the first maturity orders strictly higher, -1 when lower, 0 when
// the keys coincide. A pinned side counts as F = 1 and outranks any unpinned
// side.
int compare_maturity_exact(double t1, const AlParams& p1, bool pinned1, double t2,
                           const AlParams& p2, bool pinned2);

}  // namespace secscore
