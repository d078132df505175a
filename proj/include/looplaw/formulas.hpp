#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/laplace.hpp"
#include "looplaw/params.hpp"
#include "looplaw/quadrature.hpp"
#include "looplaw/specfun.hpp"

namespace looplaw {

struct DensityCurve {
    std::vector<double> abscissae;
    std::vector<double> values;
};

namespace detail {

inline double tan_pi(double x) {
    const double c = cos_pi(x);
    if (std::abs(c) < 1e-15) throw pole_error("tan(pi x) has a pole at x = " + std::to_string(x));
    return sin_pi(x) / c;
}

inline double sin_quarter_gamma2(const LQGParams& p) { return std::sin(pi * p.kappa / 4.0); }

// sinc(pi sqrt s0) / sinc(pi sqrt s) with s = (1 - k/4)^2 + lambda k / 2
inline double thickness_mgf_kappa(double k, double lambda) {
    if (lambda >= 1.0 - k / 8.0) return std::numeric_limits<double>::infinity();
    const double s0 = (1.0 - k / 4.0) * (1.0 - k / 4.0);
    return sinc_pi_sqrt(s0) / sinc_pi_sqrt(s0 + lambda * k / 2.0);
}

}  // namespace detail

// ---------------------------------------------------------------- thickness

/// E[exp(lambda * thickness)] for the loop parameter of p; +inf once lambda >= 1 - kappa/8.
inline double thickness_mgf(const LQGParams& p, double lambda) {
    return detail::thickness_mgf_kappa(p.loop_kappa(), lambda);
}

/// Same expression with kappa replaced by 16/kappa.
inline double kw_conjectured_mgf(const LQGParams& p, double lambda) {
    return detail::thickness_mgf_kappa(16.0 / p.loop_kappa(), lambda);
}

/// Argument x of x / sin(pi x): (gamma/2)(Q-alpha) for simple loops, (2/gamma)(Q-alpha) otherwise.
inline double loop_mass_argument(const AlphaParams& ap) {
    const auto& p = ap.base;
    const double f = p.regime == Regime::simple ? p.gamma / 2.0 : 2.0 / p.gamma;
    return f * (p.q - ap.alpha);
}

/// x / sin(pi x), the alpha-dependent part of the loop mass with the unknown constant stripped.
inline double loop_mass_ratio(const AlphaParams& ap) {
    const double x = loop_mass_argument(ap);
    if (std::abs(x) < 1e-8) return 1.0 / (pi * sinc_pi_sqrt(x * x));
    const double s = sin_pi(x);
    if (std::abs(s) < 1e-14 * std::max(1.0, std::abs(x)))
        throw pole_error("loop_mass_ratio: sin(pi x) vanishes at x = " + std::to_string(x));
    return x / s;
}

/// loop_mass_ratio divided by its value at alpha = gamma (lambda = 0).
inline double normalized_loop_mass_ratio(const AlphaParams& ap) {
    return loop_mass_ratio(ap) / loop_mass_ratio(make_alpha(ap.base, ap.base.gamma));
}

// ---------------------------------------------------------------- sphere and disk laws

/// Unit-volume reflection coefficient. Only Gamma poles are rejected.
inline double reflection_coefficient(const AlphaParams& ap) {
    const auto& p = ap.base;
    const double u = p.gamma / 2.0 * (p.q - ap.alpha);
    const double a0 = 2.0 / p.gamma * (p.q - ap.alpha);
    if (a0 == 0.0) throw pole_error("reflection_coefficient: alpha = Q");
    const double g2 = p.kappa / 4.0;
    const double base = pi * gamma_fn(g2) / gamma_fn(1.0 - g2);
    return -std::pow(base, a0) / a0 * gamma_fn(-u) / (gamma_fn(u) * gamma_fn(a0));
}

/// Density of the quantum area of a two-pointed sphere with insertion alpha.
inline double sphere_area_density(const AlphaParams& ap, double a) {
    detail::require(a > 0.0, "sphere_area_density: a must be > 0");
    const auto& p = ap.base;
    return 0.5 * reflection_coefficient(ap) * std::pow(a, 2.0 / p.gamma * (ap.alpha - p.q) - 1.0);
}

/// Boundary length constant R_gamma of the quantum disk.
inline double disk_length_constant(const LQGParams& p) {
    const double g2 = p.kappa / 4.0;
    if (g2 >= 1.0) throw pole_error("disk_length_constant: pole at gamma = 2");
    return std::pow(2.0 * pi, 1.0 / g2 - 1.0) / ((1.0 - g2) * std::pow(gamma_fn(1.0 - g2), 1.0 / g2));
}

inline double u_bar(const AlphaParams& ap) {
    const auto& p = ap.base;
    detail::require(ap.alpha > p.gamma / 2.0, "u_bar: alpha must exceed gamma/2");
    const double a0 = 2.0 / p.gamma * (p.q - ap.alpha);
    const double base = std::pow(2.0, -p.gamma * ap.alpha / 2.0) * 2.0 * pi / gamma_fn(1.0 - p.kappa / 4.0);
    return std::pow(base, a0) * gamma_fn(p.gamma * ap.alpha / 2.0 - p.kappa / 4.0);
}

/// Shape of the inverse gamma area law, (2/gamma)(Q - alpha).
inline double fzz_shape(const AlphaParams& ap) { return 2.0 / ap.base.gamma * (ap.base.q - ap.alpha); }

/// Scale of the inverse gamma area law, 1 / (4 sin(pi gamma^2 / 4)).
inline double fzz_scale(const LQGParams& p) { return 1.0 / (4.0 * detail::sin_quarter_gamma2(p)); }

/// Total mass of the one-bulk-point disk with boundary length ell.
inline double disk_length_mass(const AlphaParams& ap, double ell) {
    detail::require(ell > 0.0, "disk_length_mass: ell must be > 0");
    const auto& p = ap.base;
    return 2.0 / p.gamma * std::pow(2.0, -ap.alpha * ap.alpha / 2.0) * u_bar(ap) *
           std::pow(ell, 2.0 / p.gamma * (ap.alpha - p.q) - 1.0);
}

/// Inverse gamma density of the area at unit boundary length.
inline double fzz_area_density(const AlphaParams& ap, double x) {
    detail::require(x > 0.0, "fzz_area_density: x must be > 0");
    const double a0 = fzz_shape(ap);
    detail::require(a0 > 0.0, "fzz_area_density: need alpha < Q");
    const double s = fzz_scale(ap.base);
    return std::exp(a0 * std::log(s) - (a0 + 1.0) * std::log(x) - s / x - std::lgamma(a0));
}

/// Laplace transform in mu of the area under the disk measure with boundary length ell.
inline double fzz_laplace(const AlphaParams& ap, double ell, double mu, const QuadratureConfig& cfg = {}) {
    detail::require(ell > 0.0 && mu > 0.0, "fzz_laplace: ell and mu must be > 0");
    const double a0 = fzz_shape(ap);
    detail::require(a0 > 0.0, "fzz_laplace: need alpha < Q");
    const double root = std::sqrt(mu / detail::sin_quarter_gamma2(ap.base));
    const auto& p = ap.base;
    const double pref = 2.0 / p.gamma * std::pow(2.0, -ap.alpha * ap.alpha / 2.0) * u_bar(ap) / ell;
    // (2/Gamma(a0)) (root/2)^a0 K_a0(ell root) = ell^-a0 Kbar_a0(ell root)
    return pref * std::pow(ell, -a0) * bessel_k_bar(a0, ell * root, cfg);
}

/// l |M(alpha; l)|^2 P(A <= l^2 s) with s = 1/(4 sin(pi gamma^2/4)), the inverse gamma area CDF.
inline double welding_mass_integrand(const AlphaParams& ap, double ell) {
    const double a0 = fzz_shape(ap);
    detail::require(a0 > 0.0, "welding_mass_integrand: need alpha < Q");
    const double m = disk_length_mass(ap, ell);
    return ell * m * m * lower_incomplete_gamma(a0, ell * ell * fzz_scale(ap.base)) / gamma_fn(a0);
}

/// Integral of welding_mass_integrand over [eps, delta].
inline double welding_mass_integral(const AlphaParams& ap, double eps, double delta, const QuadratureConfig& cfg = {}) {
    detail::require(eps > 0.0 && delta > eps, "welding_mass_integral: need 0 < eps < delta");
    // the integrand behaves like 1/l, so integrate in log l
    auto f = [&](double u) {
        const double l = std::exp(u);
        return welding_mass_integrand(ap, l) * l;
    };
    return integrate(f, std::log(eps), std::log(delta), cfg).value;
}

/// Leading small-eps form: K^2 (4 sin)^(-a0) / (a0 Gamma(a0)) * log(1/eps), K the prefactor of |M(alpha; l)|.
inline double welding_mass_asymptotic(const AlphaParams& ap, double eps) {
    detail::require(eps > 0.0 && eps < 1.0, "welding_mass_asymptotic: eps must lie in (0,1)");
    const double a0 = fzz_shape(ap);
    detail::require(a0 > 0.0, "welding_mass_asymptotic: need alpha < Q");
    const double k = 2.0 / ap.base.gamma * std::pow(2.0, -ap.alpha * ap.alpha / 2.0) * u_bar(ap);
    return k * k * std::pow(fzz_scale(ap.base), a0) / (a0 * gamma_fn(a0)) * std::log(1.0 / eps);
}

// ---------------------------------------------------------------- generalized quantum disk

inline void require_non_simple(const LQGParams& p, const char* who) {
    detail::require(p.kappa_prime > 4.0 && p.kappa_prime < 8.0, std::string(who) + ": requires kappa' in (4,8)");
}

inline double gqd_m_prime(const LQGParams& p, double mu) {
    detail::require(mu > 0.0, "gqd_m_prime: mu must be > 0");
    return 2.0 * std::pow(mu / (4.0 * detail::sin_quarter_gamma2(p)), p.kappa_prime / 8.0);
}

inline double gqd_laplace(const LQGParams& p, double ell, double mu, const QuadratureConfig& cfg = {}) {
    require_non_simple(p, "gqd_laplace");
    detail::require(ell > 0.0, "gqd_laplace: ell must be > 0");
    return bessel_k_bar(4.0 / p.kappa_prime, ell * gqd_m_prime(p, mu), cfg);
}

inline double gqd_area_weighted_laplace(const LQGParams& p, double ell, double mu, const QuadratureConfig& cfg = {}) {
    require_non_simple(p, "gqd_area_weighted_laplace");
    detail::require(ell > 0.0, "gqd_area_weighted_laplace: ell must be > 0");
    const double nu = 4.0 / p.kappa_prime;
    const double x = ell * gqd_m_prime(p, mu);
    return 2.0 * p.kappa_prime / (4.0 * mu * gamma_fn(nu)) * std::pow(x / 2.0, nu + 1.0) * bessel_k(1.0 - nu, x, cfg);
}

/// Mean area of the normalized disk with boundary length ell.
inline double gqd_mean_area(const LQGParams& p, double ell) {
    require_non_simple(p, "gqd_mean_area");
    const double nu = 4.0 / p.kappa_prime;
    return p.kappa_prime / (16.0 * detail::sin_quarter_gamma2(p)) * gamma_fn(1.0 - nu) / gamma_fn(nu) *
           std::pow(ell, 2.0 * nu);
}

/// Boundary length density with the existence constant set to 1.
inline double gqd_length_density(const LQGParams& p, double ell) {
    require_non_simple(p, "gqd_length_density");
    detail::require(ell > 0.0, "gqd_length_density: ell must be > 0");
    return std::pow(ell, -2.0 - p.kappa / 4.0);
}

inline double gqd1_length_density(const LQGParams& p, double ell) {
    return gqd_length_density(p, ell) * gqd_mean_area(p, ell);
}

struct TailLaw {
    double coefficient = 0.0;
    double exponent = 0.0;
};

/// Area tail of the normalized one-bulk-point generalized disk: coefficient * x^exponent.
inline TailLaw gqd_tail_coefficient(const LQGParams& p) {
    require_non_simple(p, "gqd_tail_coefficient");
    const double kp = p.kappa_prime;
    const double c = gamma_fn(4.0 / kp) / (gamma_fn(2.0 - 4.0 / kp) * gamma_fn(2.0 - kp / 4.0)) *
                     std::pow(4.0 * detail::sin_quarter_gamma2(p), 1.0 - kp / 4.0);
    return {c, 1.0 - kp / 4.0};
}

inline TailLaw fd_alpha_tail_coefficient(const AlphaParams& ap) {
    const auto& p = ap.base;
    require_non_simple(p, "fd_alpha_tail_coefficient");
    const double kp = p.kappa_prime;
    const double ag = ap.alpha * p.gamma / 2.0;
    const double e = -1.0 - kp / 4.0 + 2.0 * ap.alpha / p.gamma;
    const double c = gamma_fn(ag - 4.0 / kp) / (gamma_fn(2.0 - ag + 4.0 / kp) * gamma_fn(2.0 * ap.alpha / p.gamma - kp / 4.0)) *
                     std::pow(4.0 * detail::sin_quarter_gamma2(p), e);
    return {c, e};
}

/// (1 - Kbar_order(M'(mu))) / mu at complex mu, unit boundary length.
inline complex gqd_tail_transform(const LQGParams& p, double order, complex mu) {
    const complex lw = std::log(mu / (4.0 * detail::sin_quarter_gamma2(p)));
    const complex y = std::exp(p.kappa_prime / 4.0 * lw);        // (M'/2)^2
    const complex y_nu = std::exp(order * p.kappa_prime / 4.0 * lw);
    return one_minus_bessel_k_bar_series(order, y, y_nu) / mu;
}

/// P(A > x) for the area law with transform Kbar_order(M'(mu)), by Talbot inversion.
inline double gqd_area_tail_probability(const LQGParams& p, double order, double x, const InversionConfig& cfg = {}) {
    require_non_simple(p, "gqd_area_tail_probability");
    auto f = [&](complex mu) { return gqd_tail_transform(p, order, mu); };
    return invert_laplace(f, x, cfg);
}

// ---------------------------------------------------------------- annulus and jumps

/// cos(pi (beta - 3/2)) / pi.
inline double frak_c(double beta) { return cos_pi(beta - 1.5) / pi; }

inline double annulus_mass(double a, double b, const LQGParams& p) {
    detail::require(a > 0.0 && b > 0.0, "annulus_mass: a and b must be > 0");
    return cos_pi(4.0 / p.loop_kappa() - 1.0) / (pi * std::sqrt(a * b) * (a + b));
}

inline double levy_jump_density(double beta, double a, double b) {
    detail::require(beta > 1.0 && beta < 2.0, "levy_jump_density: beta must lie in (1,2)");
    detail::require(a > 0.0 && b > 0.0, "levy_jump_density: a and b must be > 0");
    return frak_c(beta) / (a + b) * std::pow(a / b, beta + 1.0);
}

/// Disk mass at boundary length x up to a constant, x^(-beta-3/2).
inline double qd_length_mass(double beta, double x) { return std::pow(x, -beta - 1.5); }

inline double levy_jump_density_qd_form(double beta, double a, double b) {
    detail::require(a > 0.0 && b > 0.0, "levy_jump_density_qd_form: a and b must be > 0");
    return frak_c(beta) * b * qd_length_mass(beta, b) / (std::sqrt(a * b) * (a + b) * qd_length_mass(beta, a));
}

// ---------------------------------------------------------------- conformal radius

inline double dilation_constant(const LQGParams& p) {
    const double k = p.loop_kappa();
    detail::require(k > 8.0 / 3.0 && k < 8.0, "dilation_constant: kappa must lie in (8/3,8)");
    const double u = 1.0 - 4.0 / k;
    if (std::abs(k - 4.0) < 1e-6) return (1.0 - pi * pi * u * u / 3.0) / (pi * pi * (1.0 - u));
    return (k / 4.0 - 1.0) / (pi * detail::tan_pi(u));
}

/// Rightmost singularity of the conformal radius moment: the moment is finite iff lambda > this.
inline double ssw_cr_threshold(const LQGParams& p) {
    const double k = p.loop_kappa();
    const double s0 = (1.0 - 4.0 / k) * (1.0 - 4.0 / k);
    return k / 8.0 * (s0 - 0.25);
}

inline double ssw_cr_moment(const LQGParams& p, double lambda) {
    const double k = p.loop_kappa();
    detail::require(k > 8.0 / 3.0 && k < 8.0, "ssw_cr_moment: kappa must lie in (8/3,8)");
    if (lambda <= ssw_cr_threshold(p))
        throw pole_error("ssw_cr_moment: moment is infinite for lambda <= " + std::to_string(ssw_cr_threshold(p)));
    const double s = (1.0 - 4.0 / k) * (1.0 - 4.0 / k) - 8.0 * lambda / k;
    return -cos_pi(4.0 / k) / cos_pi_sqrt(s);
}

inline complex ssw_cr_moment(const LQGParams& p, complex lambda) {
    const double k = p.loop_kappa();
    const complex s = (1.0 - 4.0 / k) * (1.0 - 4.0 / k) - 8.0 * lambda / k;
    return -cos_pi(4.0 / k) * sec_pi_sqrt(s);
}

// ---------------------------------------------------------------- growth fragmentation

inline double nu_theta_density(double theta, double x) {
    detail::require(x > 0.5, "nu_theta_density: x must exceed 1/2");
    const double c = gamma_fn(theta + 1.0) / pi;
    if (x < 1.0) return c / std::pow(x * (1.0 - x), theta + 1.0);
    if (x > 1.0) return c * sin_pi(theta - 0.5) / std::pow(x * (x - 1.0), theta + 1.0);
    return std::numeric_limits<double>::infinity();
}

namespace detail {

// (1+d)^lambda - 1 - lambda d, with the binomial series near d = 0
inline double second_order_remainder(double lambda, double d) {
    if (std::abs(d) < 0.25) {
        double c = lambda * (lambda - 1.0) / 2.0, pw = d * d, sum = 0.0;
        for (int k = 2; k < 60; ++k) {
            const double term = c * pw;
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            c *= (lambda - k) / (k + 1.0);
            pw *= d;
        }
        return sum;
    }
    return std::expm1(lambda * std::log1p(d)) - lambda * d;
}

}  // namespace detail

/// Laplace exponent of the cascade Levy process. Finite for 0 < lambda < 2 theta + 1.
inline double psi_theta(double theta, double lambda, const QuadratureConfig& cfg = {}) {
    detail::require(theta > 0.5 && theta < 1.5 && theta != 1.0, "psi_theta: theta must lie in (1/2,3/2) minus {1}");
    detail::require(lambda > 0.0, "psi_theta: lambda must be > 0");
    if (lambda >= 2.0 * theta + 1.0) throw domain_error("psi_theta: integral diverges for lambda >= 2 theta + 1");
    const double linear = gamma_fn(2.0 - theta) / (2.0 * gamma_fn(2.0 - 2.0 * theta) * sin_pi(theta)) +
                          gamma_fn(theta + 1.0) * incomplete_beta_half_continued(-theta, 2.0 - theta, cfg) / pi;
    // integrand near x = 1 behaves like |x-1|^(1-theta); substitute |x-1| = u^(1/e),
    // after which the powers of u cancel exactly
    const double e = 2.0 - theta;
    const double c = gamma_fn(theta + 1.0) / pi;
    auto side = [&](double sign) {
        const double w = sign < 0 ? 1.0 : sin_pi(theta - 0.5);
        return [&, sign, w](double u) {
            if (u <= 0.0) return 0.0;
            const double d = std::pow(u, 1.0 / e);
            const double r2 = d < 1e-100 ? 0.5 * lambda * (lambda - 1.0)
                                         : detail::second_order_remainder(lambda, sign * d) / (d * d);
            return r2 * c * w / std::pow(1.0 + sign * d, theta + 1.0) / e;
        };
    };
    const double left = integrate(side(-1.0), 0.0, std::pow(0.5, e), cfg).value;
    const double near_right = integrate(side(1.0), 0.0, 1.0, cfg).value;
    // log form so that huge x never produces inf * 0
    auto tail = [&](double x) {
        const double lw = -(theta + 1.0) * (std::log(x) + std::log(x - 1.0));
        return c * sin_pi(theta - 0.5) * (std::exp(lambda * std::log(x) + lw) - (1.0 + lambda * (x - 1.0)) * std::exp(lw));
    };
    // tail decays like x^(-1-q); x = 2 w^(-1/q) flattens it on (0, 1]
    const double q = 2.0 * theta + 1.0 - lambda;
    auto tail_w = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double x = 2.0 * std::pow(w, -1.0 / q);
        if (!std::isfinite(x)) return 0.0;
        return tail(x) * x / (q * w);
    };
    const double far_right = integrate(tail_w, 0.0, 1.0, cfg).value;
    return linear * lambda + left + near_right + far_right;
}

// ---------------------------------------------------------------- named constants

enum class ConstantId {
    R_gamma,
    U_bar,
    R_bar,
    M_prime,
    D_alpha,
    jump_moment,
    C_gamma,
    Ktilde_gamma,
    K_gamma,
    Cprime_over_Rprime2,
    Kprime_over_Rprime2,
    frakC,
    Delta_alpha,
};

struct ConstantArgs {
    LQGParams p;
    std::optional<double> alpha;
    std::optional<double> mu;
};

inline double kprime_over_rprime2(const LQGParams& p) {
    const double g2 = p.kappa;
    return -std::pow(2.0 / p.gamma, 5.0) * std::pow(pi, -8.0 / g2 + 2.0) * std::pow(2.0, -8.0 / g2) *
           gamma_fn(4.0 / g2 - 1.0) / gamma_fn(2.0 - 4.0 / g2) * std::pow(gamma_fn(1.0 - g2 / 4.0), 8.0 / g2 + 2.0) *
           detail::tan_pi(g2 / 4.0 - 1.0);
}

inline double eval_constant(ConstantId id, const ConstantArgs& args) {
    const auto& p = args.p;
    const double g = p.gamma, g2 = p.kappa, q = p.q;
    auto need_alpha = [&]() {
        detail::require(args.alpha.has_value(), "eval_constant: alpha is required");
        return *args.alpha;
    };
    switch (id) {
        case ConstantId::R_gamma:
            return disk_length_constant(p);
        case ConstantId::U_bar:
            return u_bar(make_alpha(p, need_alpha()));
        case ConstantId::R_bar:
            return reflection_coefficient(make_alpha(p, need_alpha()));
        case ConstantId::M_prime:
            detail::require(args.mu.has_value(), "eval_constant: mu is required");
            return gqd_m_prime(p, *args.mu);
        case ConstantId::D_alpha: {
            const double a = need_alpha();
            return std::pow(2.0 * pi, 2.0 - 2.0 * a / g) * std::pow(2.0, 2.0 - a * q + a * a / 2.0) *
                   gamma_fn(2.0 * a / g - 4.0 / g2) / gamma_fn(2.0 - 4.0 / g2) *
                   std::pow(gamma_fn(1.0 - g2 / 4.0), 2.0 * a / g - 2.0);
        }
        case ConstantId::jump_moment: {
            const double a = need_alpha();
            return gamma_fn(1.0 - g2 / 4.0) * gamma_fn(2.0 * a / g - 4.0 / g2) /
                   (gamma_fn(-4.0 / g2) * gamma_fn(g * a / 2.0 - g2 / 4.0));
        }
        case ConstantId::C_gamma:
            return gamma_fn(g2 / 4.0) * gamma_fn(1.0 - g2 / 4.0) / (4.0 * pi * (q - g) * (q - g)) *
                   detail::tan_pi(4.0 / g2 - 1.0);
        case ConstantId::Ktilde_gamma:
            return g / (16.0 * pi * pi * (q - g)) * gamma_fn(g2 / 4.0) * gamma_fn(1.0 - g2 / 4.0);
        case ConstantId::K_gamma:
            return g / 8.0 * gamma_fn(g2 / 4.0) * gamma_fn(1.0 - g2 / 4.0) / std::pow(q - g, 4.0) *
                   detail::tan_pi(4.0 / g2 - 1.0);
        case ConstantId::Cprime_over_Rprime2:
            return kprime_over_rprime2(p) * 2.0 * (q - g) * (q - g) / (pi * g);
        case ConstantId::Kprime_over_Rprime2:
            return kprime_over_rprime2(p);
        case ConstantId::frakC:
            return frak_c(4.0 / p.loop_kappa() + 0.5);
        case ConstantId::Delta_alpha: {
            const double a = need_alpha();
            return a / 2.0 * (q - a / 2.0);
        }
    }
    throw domain_error("eval_constant: unknown id");
}

}  // namespace looplaw
