#pragma once

#include <cmath>
#include <limits>

#include "looplaw/errors.hpp"

namespace looplaw {

enum class Regime { simple, non_simple };

struct LQGParams {
    double gamma = 0.0;
    double q = 0.0;
    double kappa = 0.0;        // gamma^2
    double kappa_prime = 0.0;  // 16 / gamma^2
    Regime regime = Regime::simple;

    /// The loop parameter the params were built from (kappa or kappa_prime).
    [[nodiscard]] double loop_kappa() const { return regime == Regime::simple ? kappa : kappa_prime; }
};

struct AlphaParams {
    LQGParams base;
    double alpha = 0.0;
    double lambda = 0.0;
    double weight_w = 0.0;
};

struct StableIndex {
    double beta = 0.0;
    double theta = 0.0;
    double nu_looptree = std::numeric_limits<double>::quiet_NaN();  // NaN when 4/gamma^2 is outside (1,2)

    [[nodiscard]] bool has_nu() const { return !std::isnan(nu_looptree); }
};

/// gamma = sqrt(kappa) for kappa <= 4 and gamma = 4/sqrt(kappa) otherwise.
inline LQGParams from_kappa(double kappa) {
    detail::require(kappa > 0.0 && kappa < 8.0, "from_kappa: kappa must lie in (0,8)");
    LQGParams p;
    if (kappa <= 4.0) {
        p.regime = Regime::simple;
        p.gamma = std::sqrt(kappa);
        p.kappa = kappa;
        p.kappa_prime = 16.0 / kappa;
    } else {
        p.regime = Regime::non_simple;
        p.gamma = 4.0 / std::sqrt(kappa);
        p.kappa = 16.0 / kappa;
        p.kappa_prime = kappa;
    }
    p.q = p.gamma / 2.0 + 2.0 / p.gamma;
    return p;
}

inline LQGParams from_gamma(double gamma, Regime regime = Regime::simple) {
    detail::require(gamma > 0.0 && gamma <= 2.0, "from_gamma: gamma must lie in (0,2]");
    LQGParams p;
    p.regime = regime;
    p.gamma = gamma;
    p.kappa = gamma * gamma;
    p.kappa_prime = 16.0 / p.kappa;
    p.q = gamma / 2.0 + 2.0 / gamma;
    return p;
}

inline double lambda_of_alpha(const LQGParams& p, double alpha) {
    return alpha * alpha / 2.0 - p.q * alpha + 2.0;
}

inline AlphaParams make_alpha(const LQGParams& p, double alpha) {
    AlphaParams a;
    a.base = p;
    a.alpha = alpha;
    a.lambda = lambda_of_alpha(p, alpha);
    a.weight_w = 2.0 * p.gamma * (p.q - alpha);
    return a;
}

/// Smaller root alpha = Q - sqrt(Q^2 - 4 + 2 lambda).
inline AlphaParams alpha_for_lambda(const LQGParams& p, double lambda) {
    const double disc = p.q * p.q - 4.0 + 2.0 * lambda;
    detail::require(disc >= 0.0, "alpha_for_lambda: Q^2 - 4 + 2*lambda must be >= 0");
    AlphaParams a = make_alpha(p, p.q - std::sqrt(disc));
    return a;
}

inline StableIndex stable_index(const LQGParams& p) {
    const double k = p.loop_kappa();
    detail::require(k > 8.0 / 3.0 && k < 8.0, "stable_index: kappa must lie in (8/3,8)");
    StableIndex s;
    s.theta = 4.0 / k;
    s.beta = s.theta + 0.5;
    const double nu = 4.0 / p.kappa;
    if (nu > 1.0 && nu < 2.0) s.nu_looptree = nu;
    return s;
}

}  // namespace looplaw
