#include "secscore/distributions.hpp"

#include <boost/math/special_functions/owens_t.hpp>
#include <cmath>

#include "secscore/errors.hpp"

namespace secscore {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // ln(2*pi)
constexpr double kSqrt2 = 1.4142135623730950488;

}  // namespace

bool valid(const AlParams& p) {
    return std::isfinite(p.mu) && p.lambda > 0.0 && std::isfinite(p.lambda) && p.kappa > 0.0 &&
           std::isfinite(p.kappa);
}

bool valid(const LaplaceParams& p) {
    return std::isfinite(p.mu) && p.b > 0.0 && std::isfinite(p.b);
}

bool valid(const SkewNormalParams& p) {
    return std::isfinite(p.xi) && p.omega > 0.0 && std::isfinite(p.omega) &&
           std::isfinite(p.alpha);
}

double al_cdf(double t, const AlParams& p) {
    const double k2 = p.kappa * p.kappa;
    if (t <= p.mu) {
        return k2 / (1.0 + k2) * std::exp((p.lambda / p.kappa) * (t - p.mu));
    }
    // 1 - e^x / (1+k2) written through expm1 so the value stays accurate
    // when it is close to zero (large 1/(lambda*kappa) scales)
    const double x = -p.lambda * p.kappa * (t - p.mu) - std::log1p(k2);
    return -std::expm1(x);
}

double al_pdf(double t, const AlParams& p) {
    const double k2 = p.kappa * p.kappa;
    const double c = p.lambda * p.kappa / (1.0 + k2);
    if (t <= p.mu) {
        return c * std::exp((p.lambda / p.kappa) * (t - p.mu));
    }
    return c * std::exp(-p.lambda * p.kappa * (t - p.mu));
}

double al_log_cdf(double t, const AlParams& p) {
    const double k2 = p.kappa * p.kappa;
    if (t <= p.mu) {
        return (p.lambda / p.kappa) * (t - p.mu) - std::log1p(1.0 / k2);
    }
    return std::log1p(-std::exp(-p.lambda * p.kappa * (t - p.mu)) / (1.0 + k2));
}

double al_log_pdf(double t, const AlParams& p) {
    const double k2 = p.kappa * p.kappa;
    const double logc = std::log(p.lambda) + std::log(p.kappa) - std::log1p(k2);
    if (t <= p.mu) {
        return logc + (p.lambda / p.kappa) * (t - p.mu);
    }
    return logc - p.lambda * p.kappa * (t - p.mu);
}

double al_quantile(double prob, const AlParams& p) {
    if (!(prob > 0.0 && prob < 1.0)) throw Error("al_quantile: probability outside (0,1)");
    const double k2 = p.kappa * p.kappa;
    const double p0 = k2 / (1.0 + k2);
    if (prob <= p0) {
        return p.mu + (p.kappa / p.lambda) * std::log(prob * (1.0 + k2) / k2);
    }
    return p.mu - std::log((1.0 - prob) * (1.0 + k2)) / (p.lambda * p.kappa);
}

double laplace_cdf(double t, const LaplaceParams& p) {
    if (t <= p.mu) return 0.5 * std::exp((t - p.mu) / p.b);
    return 1.0 - 0.5 * std::exp(-(t - p.mu) / p.b);
}

double laplace_log_pdf(double t, const LaplaceParams& p) {
    return -std::log(2.0 * p.b) - std::abs(t - p.mu) / p.b;
}

AlParams to_al(const LaplaceParams& p) {
    return AlParams{p.mu, 1.0 / p.b, 1.0};
}

double norm_cdf(double z) {
    return 0.5 * std::erfc(-z / kSqrt2);
}

double log_norm_cdf(double z) {
    if (z > -25.0) {
        return std::log(norm_cdf(z));
    }
    // Asymptotic tail expansion; erfc underflows long before it stops converging.
    const double z2 = z * z;
    const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2) +
                          105.0 / (z2 * z2 * z2 * z2);
    return -0.5 * z2 - std::log(-z) - 0.5 * kLog2Pi + std::log(series);
}

double owen_t(double h, double a) {
    return boost::math::owens_t(h, a);
}

double skewnormal_cdf(double t, const SkewNormalParams& p) {
    const double z = (t - p.xi) / p.omega;
    const double v = norm_cdf(z) - 2.0 * owen_t(z, p.alpha);
    return std::min(1.0, std::max(0.0, v));
}

double skewnormal_log_pdf(double t, const SkewNormalParams& p) {
    const double z = (t - p.xi) / p.omega;
    return std::log(2.0) - std::log(p.omega) - 0.5 * z * z - 0.5 * kLog2Pi +
           log_norm_cdf(p.alpha * z);
}

}  // namespace secscore
