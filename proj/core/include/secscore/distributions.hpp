#pragma once

namespace secscore {

// Asymmetric Laplace, rate parameterization: lambda in 1/weeks, kappa asymmetry.
struct AlParams {
    double mu;
    double lambda;
    double kappa;
    bool operator==(const AlParams&) const = default;
};

struct LaplaceParams {
    double mu;
    double b;
    bool operator==(const LaplaceParams&) const = default;
};

struct SkewNormalParams {
    double xi;
    double omega;
    double alpha;
    bool operator==(const SkewNormalParams&) const = default;
};

bool valid(const AlParams& p);
bool valid(const LaplaceParams& p);
bool valid(const SkewNormalParams& p);

// F(t) = kappa^2/(1+kappa^2) * exp((lambda/kappa)(t-mu))      for t <= mu
//        1 - 1/(1+kappa^2) * exp(-lambda*kappa*(t-mu))        for t > mu
double al_cdf(double t, const AlParams& p);
double al_pdf(double t, const AlParams& p);
double al_log_pdf(double t, const AlParams& p);

// log F(t), evaluated in the log domain so tails that collapse to 0 or 1 in
// al_cdf stay resolvable.
double al_log_cdf(double t, const AlParams& p);

// Inverse of al_cdf on (0, 1).
double al_quantile(double prob, const AlParams& p);

double laplace_cdf(double t, const LaplaceParams& p);
double laplace_log_pdf(double t, const LaplaceParams& p);

// The AL family nests Laplace at kappa = 1, lambda = 1/b.
AlParams to_al(const LaplaceParams& p);

double skewnormal_cdf(double t, const SkewNormalParams& p);
double skewnormal_log_pdf(double t, const SkewNormalParams& p);

double norm_cdf(double z);
double log_norm_cdf(double z);
double owen_t(double h, double a);

}  // namespace secscore
