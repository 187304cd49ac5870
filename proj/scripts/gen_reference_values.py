#!/usr/bin/env python3
"""Prints the reference constants used by the unit tests.

Every closed-form quantity the library computes is re-derived here with
mpmath at 50 significant digits and printed with 17, enough to pin the
correctly rounded double. Copy the output into the test sources when a
formula or a test point changes.
"""

import mpmath as mp

mp.mp.dps = 50


def al_cdf(t, mu, lam, kappa):
    k2 = kappa * kappa
    if t <= mu:
        return k2 / (1 + k2) * mp.e ** ((lam / kappa) * (t - mu))
    return 1 - 1 / (1 + k2) * mp.e ** (-lam * kappa * (t - mu))


def al_log_cdf(t, mu, lam, kappa):
    k2 = kappa * kappa
    if t <= mu:
        return (lam / kappa) * (t - mu) - mp.log1p(1 / k2)
    return mp.log1p(-mp.e ** (-lam * kappa * (t - mu)) / (1 + k2))


def al_pdf(t, mu, lam, kappa):
    k2 = kappa * kappa
    c = lam * kappa / (1 + k2)
    if t <= mu:
        return c * mp.e ** ((lam / kappa) * (t - mu))
    return c * mp.e ** (-lam * kappa * (t - mu))


def al_quantile(p, mu, lam, kappa):
    k2 = kappa * kappa
    p0 = k2 / (1 + k2)
    if p <= p0:
        return mu + (kappa / lam) * mp.log(p * (1 + k2) / k2)
    return mu - mp.log((1 - p) * (1 + k2)) / (lam * kappa)


def al_loglik(xs, mu, lam, kappa):
    return mp.fsum(mp.log(al_pdf(x, mu, lam, kappa)) for x in xs)


def laplace_cdf(t, mu, b):
    if t <= mu:
        return mp.mpf(0.5) * mp.e ** ((t - mu) / b)
    return 1 - mp.mpf(0.5) * mp.e ** (-(t - mu) / b)


def laplace_log_pdf(t, mu, b):
    return -mp.log(2 * b) - abs(t - mu) / b


def owen_t(h, a):
    return mp.quad(lambda x: mp.e ** (-h * h * (1 + x * x) / 2) / (1 + x * x), [0, a]) / (
        2 * mp.pi
    )


def norm_cdf(z):
    return mp.ncdf(z)


def sn_cdf(t, xi, omega, alpha):
    z = (t - xi) / omega
    return norm_cdf(z) - 2 * owen_t(z, alpha)


def sn_log_pdf(t, xi, omega, alpha):
    z = (t - xi) / omega
    return (
        mp.log(2)
        - mp.log(omega)
        + mp.log(mp.npdf(z))
        + mp.log(norm_cdf(alpha * z))
    )


def p(name, value):
    print(f"{name} = {mp.nstr(mp.mpf(value), 17)}")


GEN = (mp.mpf("-0.2857"), mp.mpf("21.79"), mp.mpf("0.9075"))
PHP = (mp.mpf("-0.4286"), mp.mpf("14.56"), mp.mpf("1.128"))
RUBY = (mp.mpf("-5.286"), mp.mpf("5.109e-3"), mp.mpf("1.085e-4"))
TOY = (mp.mpf("0.1"), mp.mpf("2.0"), mp.mpf("0.8"))

print("# asymmetric laplace, toy params (0.1, 2.0, 0.8)")
p("al_cdf(-1)", al_cdf(-1, *TOY))
p("al_cdf(0.1)", al_cdf(mp.mpf("0.1"), *TOY))
p("al_cdf(2.5)", al_cdf(mp.mpf("2.5"), *TOY))
p("al_pdf(-1)", al_pdf(-1, *TOY))
p("al_pdf(2.5)", al_pdf(mp.mpf("2.5"), *TOY))
p("al_log_pdf(-1)", mp.log(al_pdf(-1, *TOY)))
p("al_log_pdf(2.5)", mp.log(al_pdf(mp.mpf("2.5"), *TOY)))
p("al_quantile(0.2)", al_quantile(mp.mpf("0.2"), *TOY))
p("al_quantile(p0)", al_quantile(mp.mpf("0.64") / mp.mpf("1.64"), *TOY))
p("al_quantile(0.9)", al_quantile(mp.mpf("0.9"), *TOY))
p("al_log_cdf(-1)", al_log_cdf(-1, *TOY))
p("al_log_cdf(2.5)", al_log_cdf(mp.mpf("2.5"), *TOY))
p("al_log_cdf(40)", al_log_cdf(40, *TOY))
sample = [mp.mpf(x) for x in ("-1", "-0.5", "0", "0.3", "1.2", "2.4", "5", "9.1")]
p("al_loglik(sample)", al_loglik(sample, *TOY))

print("# asymmetric laplace, General row params")
p("gen_cdf(0)", al_cdf(0, *GEN))
p("gen_pdf(0)", al_pdf(0, *GEN))
p("gen_maturity(0)", mp.mpf("0.91") + mp.mpf("0.09") * al_cdf(0, *GEN))
p("gen_quantile(0.5)", al_quantile(mp.mpf("0.5"), *GEN))
p("gen_quantile(1e-12)", al_quantile(mp.mpf("1e-12"), *GEN))
p("gen_quantile(1-1e-6)", al_quantile(1 - mp.mpf("1e-6"), *GEN))
p("gen_log_cdf(-1)", al_log_cdf(-1, *GEN))
p("gen_log_cdf(0)", al_log_cdf(0, *GEN))
p("gen_log_cdf(10)", al_log_cdf(10, *GEN))

print("# asymmetric laplace, PHP / ruby row params")
p("php_cdf(0)", al_cdf(0, *PHP))
p("ruby_cdf(0)", al_cdf(0, *RUBY))
p("ruby_cdf(1)", al_cdf(1, *RUBY))
p("ruby_quantile(1e-12)", al_quantile(mp.mpf("1e-12"), *RUBY))

print("# laplace (2.5, 2.2)")
p("laplace_cdf(0.5)", laplace_cdf(mp.mpf("0.5"), mp.mpf("2.5"), mp.mpf("2.2")))
p("laplace_cdf(4)", laplace_cdf(4, mp.mpf("2.5"), mp.mpf("2.2")))
p("laplace_log_pdf(0.5)", laplace_log_pdf(mp.mpf("0.5"), mp.mpf("2.5"), mp.mpf("2.2")))
p("laplace_log_pdf(4)", laplace_log_pdf(4, mp.mpf("2.5"), mp.mpf("2.2")))
fit = [mp.mpf(x) for x in ("1", "2", "2.5", "4", "10")]
b_hat = mp.fsum(abs(x - mp.mpf("2.5")) for x in fit) / 5
p("laplace_fit_b", b_hat)
p("laplace_fit_loglik", -5 * (mp.log(2 * b_hat) + 1))

print("# skew normal and friends")
p("owen_t(1.5, 0.7)", owen_t(mp.mpf("1.5"), mp.mpf("0.7")))
p("owen_t(-0.5, 2.0)", owen_t(mp.mpf("-0.5"), mp.mpf("2.0")))
p("sn_cdf(0.5; 0,1,2)", sn_cdf(mp.mpf("0.5"), 0, 1, 2))
p("sn_cdf(-1; 0.5,2,-3)", sn_cdf(-1, mp.mpf("0.5"), 2, -3))
p("sn_log_pdf(1.2; 0,1,3)", sn_log_pdf(mp.mpf("1.2"), 0, 1, 3))
p("sn_log_pdf(-2; 0,1,5)", sn_log_pdf(-2, 0, 1, 5))
p("log_norm_cdf(-1)", mp.log(norm_cdf(-1)))
p("log_norm_cdf(-10)", mp.log(norm_cdf(-10)))
p("log_norm_cdf(-40)", mp.log(norm_cdf(-40)))

print("# empirical cdf mse, samples {1,2,2,5}, AL(0.5, 1.0, 1.0)")
pts = [(1, mp.mpf("0.25")), (2, mp.mpf("0.75")), (5, mp.mpf(1))]
mse = mp.fsum((al_cdf(t, mp.mpf("0.5"), 1, 1) - f) ** 2 for t, f in pts) / 3
p("mse_toy", mse)

print("# crossover pair: A=(0.5,1.2,0.9) published first, B=(0.2,2.0,1.1) 21 days later")
A = (mp.mpf("0.5"), mp.mpf("1.2"), mp.mpf("0.9"))
B = (mp.mpf("0.2"), mp.mpf("2.0"), mp.mpf("1.1"))
for days in (32, 46):
    t_a = mp.mpf(days) / 7
    t_b = mp.mpf(days - 21) / 7
    s_a = mp.mpf("7.5") * (mp.mpf("0.91") + mp.mpf("0.09") * al_cdf(t_a, *A))
    s_b = mp.mpf("7.5") * (mp.mpf("0.91") + mp.mpf("0.09") * al_cdf(t_b, *B))
    p(f"crossover_day{days}_a", s_a)
    p(f"crossover_day{days}_b", s_b)
