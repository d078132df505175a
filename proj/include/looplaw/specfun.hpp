#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "looplaw/errors.hpp"
#include "looplaw/quadrature.hpp"

namespace looplaw {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// sin(pi x) with exact argument reduction.
inline double sin_pi(double x) {
    const double n = std::nearbyint(x);
    const double r = x - n;
    const double s = std::sin(pi * r);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

inline double cos_pi(double x) { return sin_pi(0.5 - std::fmod(x, 2.0)); }

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

/// Lanczos approximation (g = 7, nine terms) with reflection below 1/2.
inline double gamma_fn(double x) {
    static constexpr std::array<double, 9> p = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x)) throw pole_error("gamma_fn: pole at " + std::to_string(x));
    if (x < 0.5) return pi / (sin_pi(x) * gamma_fn(1.0 - x));
    if (x == std::floor(x) && x <= 21.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
        return f;
    }
    const double z = x - 1.0;
    double a = p[0];
    for (int i = 1; i < 9; ++i) a += p[i] / (z + i);
    const double t = z + 7.5;
    // split the power to stay finite up to x ~ 171
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * pi) * half * (half * std::exp(-t)) * a;
}

namespace detail {

inline double gamma_series(double a, double y) {
    // sum_{n>=0} y^n / (a (a+1) ... (a+n))
    double term = 1.0 / a, sum = term;
    for (int n = 1; n < 100000; ++n) {
        term *= y / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) return sum;
    }
    throw numeric_error("lower_incomplete_gamma: series did not converge");
}

inline double upper_gamma_fraction(double a, double y) {
    // modified Lentz evaluation of the continued fraction for Gamma(a, y) e^y y^-a
    constexpr double tiny = 1e-300;
    double b = y + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return h;
    }
    throw numeric_error("upper incomplete gamma: continued fraction did not converge");
}

}  // namespace detail

/// Unnormalized lower incomplete gamma integral from 0 to y.
inline double lower_incomplete_gamma(double a, double y) {
    detail::require(a > 0.0, "lower_incomplete_gamma: a must be > 0");
    detail::require(y >= 0.0, "lower_incomplete_gamma: y must be >= 0");
    if (y == 0.0) return 0.0;
    const double scale = std::exp(a * std::log(y) - y);
    if (y < a + 1.0) return scale * detail::gamma_series(a, y);
    return gamma_fn(a) - scale * detail::upper_gamma_fraction(a, y);
}

/// Regularized upper incomplete gamma Q(a, y), accurate in the far tail.
inline double upper_gamma_q(double a, double y) {
    detail::require(a > 0.0 && y >= 0.0, "upper_gamma_q: need a > 0, y >= 0");
    if (y == 0.0) return 1.0;
    if (y < a + 1.0) return 1.0 - lower_incomplete_gamma(a, y) / gamma_fn(a);
    return std::exp(a * std::log(y) - y - std::lgamma(a)) * detail::upper_gamma_fraction(a, y);
}

namespace detail {

// sum_{k>=k0} (1-b)_k / k! * t^(k-k0)
inline double binomial_tail(double b, int k0, double t) {
    double c = 1.0;
    for (int k = 0; k < k0; ++k) c *= (k + 1.0 - b) / (k + 1.0);
    double sum = 0.0, pw = 1.0;
    for (int k = k0; k < k0 + 400; ++k) {
        const double term = c * pw;
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && k > k0 + 2) break;
        c *= (k + 1.0 - b) / (k + 1.0);
        pw *= t;
    }
    return sum;
}

inline double incomplete_beta_half_impl(double a, double b, int drop, const QuadratureConfig& cfg) {
    // t^(a-1) [(1-t)^(b-1) - first `drop` Taylor terms], substituted u = t^(a+drop)
    const double e = a + drop;
    const double upper = std::pow(0.5, e);
    auto f = [&](double u) {
        const double t = std::pow(u, 1.0 / e);
        if (drop == 0) return std::pow(1.0 - t, b - 1.0) / e;
        return binomial_tail(b, drop, t) / e;
    };
    double value = integrate(f, 0.0, upper, cfg).value;
    double c = 1.0;
    for (int k = 0; k < drop; ++k) {
        value += c * std::pow(0.5, a + k) / (a + k);
        c *= (k + 1.0 - b) / (k + 1.0);
    }
    return value;
}

}  // namespace detail

/// Incomplete Beta integral over (0, 1/2). Requires a > 0.
inline double incomplete_beta_half(double a, double b, const QuadratureConfig& cfg = {}) {
    if (!(a > 0.0)) throw domain_error("incomplete_beta_half: integral diverges for a <= 0");
    return detail::incomplete_beta_half_impl(a, b, 0, cfg);
}

/// Analytic continuation of incomplete_beta_half to a <= 0 (non-integer),
/// obtained by subtracting the divergent Taylor terms of (1-t)^(b-1).
inline double incomplete_beta_half_continued(double a, double b, const QuadratureConfig& cfg = {}) {
    if (a > 0.0) return incomplete_beta_half(a, b, cfg);
    if (a == std::floor(a)) throw pole_error("incomplete_beta_half_continued: pole at integer a");
    const int drop = static_cast<int>(std::floor(-a)) + 1;
    return detail::incomplete_beta_half_impl(a, b, drop, cfg);
}

/// Riemann zeta for real s > 1 (Euler-Maclaurin, N = 12).
inline double riemann_zeta(double s) {
    detail::require(s > 1.0, "riemann_zeta: requires s > 1");
    constexpr int n = 12;
    static constexpr std::array<double, 7> b2k = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                                  5.0 / 66, -691.0 / 2730, 7.0 / 6};
    double sum = 0.0;
    for (int k = 1; k < n; ++k) sum += std::pow(k, -s);
    const double nn = n;
    sum += std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
    double rising = s;   // s (s+1) ... (s+2j-2)
    double fact = 2.0;   // (2j)!
    double pw = std::pow(nn, -s - 1.0);
    for (int j = 1; j <= 7; ++j) {
        sum += b2k[j - 1] / fact * rising * pw;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        pw /= nn * nn;
    }
    return sum;
}

/// Modified Bessel function of the second kind from its cosh integral representation.
inline double bessel_k(double nu, double x, const QuadratureConfig& cfg = {}) {
    detail::require(x > 0.0, "bessel_k: x must be > 0");
    nu = std::abs(nu);
    if (x > 700.0) return 0.0;  // underflows in double precision
    auto log_integrand = [&](double t) {
        const double ch = std::cosh(nu * t);
        return -x * (std::cosh(t) - 1.0) + std::log(ch);
    };
    // truncate once the scaled integrand falls below abs_tol relative to its peak
    const double drop = std::max(40.0, -std::log(cfg.abs_tol));
    double peak = 0.0, t = 0.0;
    const double step = 0.25;
    while (true) {
        const double v = log_integrand(t);
        peak = std::max(peak, v);
        if (v < peak - drop && t > 0.0) break;
        t += step;
        if (t > 800.0) throw numeric_error("bessel_k: truncation search failed");
    }
    auto f = [&](double s) { return std::exp(log_integrand(s) - peak); };
    QuadratureConfig local = cfg;
    local.abs_tol = std::max(cfg.abs_tol * 1e-3, 1e-300);
    local.rel_tol = std::min(cfg.rel_tol, 1e-13);
    // panels of width ~1 keep the doubly exponential decay resolved
    const int panels = std::max(1, static_cast<int>(std::ceil(t)));
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = t * i / panels, b = t * (i + 1) / panels;
        sum += integrate(f, a, b, local).value;
    }
    return sum * std::exp(peak - x);
}

/// Normalized Bessel K: 2^(1-nu)/Gamma(nu) x^nu K_nu(x), equal to 1 at x = 0.
inline double bessel_k_bar(double nu, double x, const QuadratureConfig& cfg = {}) {
    detail::require(nu > 0.0, "bessel_k_bar: nu must be > 0");
    detail::require(x >= 0.0, "bessel_k_bar: x must be >= 0");
    if (x == 0.0) return 1.0;
    const double log_pref = (1.0 - nu) * std::log(2.0) - std::log(gamma_fn(nu)) + nu * std::log(x);
    return std::exp(log_pref) * bessel_k(nu, x, cfg);
}

/// Power series of the normalized Bessel K in y = (z/2)^2, valid for complex z.
/// y_nu must hold (z/2)^(2 nu) on the branch the caller wants.
inline complex bessel_k_bar_series(double nu, complex y, complex y_nu) {
    detail::require(nu > 0.0, "bessel_k_bar_series: nu must be > 0");
    if (nu == std::floor(nu)) throw pole_error("bessel_k_bar_series: integer order not supported");
    if (std::abs(y) > 200.0) throw numeric_error("bessel_k_bar_series: |y| too large for the series");
    complex s1 = 0.0, s2 = 0.0;
    double c1 = 1.0 / gamma_fn(1.0 - nu);  // 1 / (n! Gamma(n - nu + 1))
    double c2 = 1.0 / gamma_fn(1.0 + nu);  // 1 / (n! Gamma(n + nu + 1))
    complex pw = 1.0;
    for (int n = 0; n < 2000; ++n) {
        const complex t1 = c1 * pw, t2 = c2 * pw;
        s1 += t1;
        s2 += t2;
        if (n > std::abs(y) && std::abs(t1) + std::abs(t2) < 1e-18 * (std::abs(s1) + std::abs(s2))) break;
        c1 /= (n + 1.0) * (n + 1.0 - nu);
        c2 /= (n + 1.0) * (n + 1.0 + nu);
        pw *= y;
    }
    return gamma_fn(1.0 - nu) * (s1 - y_nu * s2);
}

/// 1 - bessel_k_bar_series, summed without the leading cancellation.
inline complex one_minus_bessel_k_bar_series(double nu, complex y, complex y_nu) {
    detail::require(nu > 0.0, "one_minus_bessel_k_bar_series: nu must be > 0");
    if (nu == std::floor(nu)) throw pole_error("one_minus_bessel_k_bar_series: integer order not supported");
    if (std::abs(y) > 200.0) throw numeric_error("one_minus_bessel_k_bar_series: |y| too large for the series");
    complex s1 = 0.0, s2 = 0.0;
    double c1 = 1.0 / gamma_fn(2.0 - nu);
    double c2 = 1.0 / gamma_fn(1.0 + nu);
    complex pw1 = y, pw2 = 1.0;
    for (int n = 0; n < 2000; ++n) {
        const complex t1 = c1 * pw1, t2 = c2 * pw2;
        s1 += t1;
        s2 += t2;
        if (n > std::abs(y) && std::abs(t1) + std::abs(t2) < 1e-18 * (std::abs(s1) + std::abs(s2))) break;
        c1 /= (n + 2.0) * (n + 2.0 - nu);
        c2 /= (n + 1.0) * (n + 1.0 + nu);
        pw1 *= y;
        pw2 *= y;
    }
    return gamma_fn(1.0 - nu) * (y_nu * s2 - s1);
}

/// sin(pi sqrt(s)) / (pi sqrt(s)) as an entire function of s.
inline double sinc_pi_sqrt(double s) {
    const double u = pi * pi * s;
    if (std::abs(s) < 0.25) {
        double term = 1.0, sum = 1.0;
        for (int n = 1; n < 40; ++n) {
            term *= -u / ((2.0 * n) * (2.0 * n + 1.0));
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    if (s > 0.0) {
        const double r = std::sqrt(s);
        return sin_pi(r) / (pi * r);
    }
    const double r = std::sqrt(-s);
    return std::sinh(pi * r) / (pi * r);
}

/// cos(pi sqrt(s)) as an entire function of s.
inline double cos_pi_sqrt(double s) {
    const double u = pi * pi * s;
    if (std::abs(s) < 0.25) {
        double term = 1.0, sum = 1.0;
        for (int n = 1; n < 40; ++n) {
            term *= -u / ((2.0 * n - 1.0) * (2.0 * n));
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    if (s > 0.0) return cos_pi(std::sqrt(s));
    return std::cosh(pi * std::sqrt(-s));
}

inline complex cos_pi_sqrt(complex s) {
    if (s.imag() == 0.0) return cos_pi_sqrt(s.real());
    if (std::abs(s) < 0.25) {
        const complex u = pi * pi * s;
        complex term = 1.0, sum = 1.0;
        for (int n = 1; n < 40; ++n) {
            term *= -u / ((2.0 * n - 1.0) * (2.0 * n));
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    return std::cos(pi * std::sqrt(s));  // even in the root, so the branch is irrelevant
}

/// 1 / cos(pi sqrt(s)) without overflow for large imaginary parts of the root.
inline complex sec_pi_sqrt(complex s) {
    const complex z = pi * std::sqrt(s);
    if (std::abs(z.imag()) < 30.0) return 1.0 / cos_pi_sqrt(s);
    const complex i(0.0, 1.0);
    const complex e = z.imag() > 0 ? std::exp(i * z) : std::exp(-i * z);
    return 2.0 * e / (1.0 + e * e);
}

}  // namespace looplaw
