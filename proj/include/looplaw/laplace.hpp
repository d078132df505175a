#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "looplaw/errors.hpp"
#include "looplaw/specfun.hpp"

namespace looplaw {

struct InversionConfig {
    int contour_nodes = 24;
    double time_scale = 0.4;     // contour radius is time_scale * nodes / t
    double check_tol = 1e-6;     // allowed gap between the nodes and 2*nodes rules

    void validate() const {
        detail::require(contour_nodes >= 8, "InversionConfig: contour_nodes must be >= 8");
        detail::require(time_scale > 0, "InversionConfig: time_scale must be > 0");
    }
};

namespace detail {

// Fixed Talbot rule (Abate-Valko).
template <class F>
double talbot(F& transform, double t, int m, double time_scale) {
    const double r = time_scale * m / t;
    double sum = 0.5 * (transform(complex(r, 0.0)) * std::exp(r * t)).real();
    for (int k = 1; k < m; ++k) {
        const double th = k * pi / m;
        const double cot = std::cos(th) / std::sin(th);
        const complex s(r * th * cot, r * th);
        const double sigma = th + (th * cot - 1.0) * cot;
        const complex term = std::exp(t * s) * transform(s) * complex(1.0, sigma);
        sum += term.real();
    }
    return r / m * sum;
}

}  // namespace detail

/// Inverse Laplace transform at t > 0. Returns the contour_nodes rule; throws
/// numeric_error when the 2*contour_nodes rule disagrees by more than check_tol.
/// Roundoff grows like exp(time_scale * nodes), so the doubled rule is only a check.
template <class F>
double invert_laplace(F&& transform, double t, const InversionConfig& cfg = {}) {
    cfg.validate();
    detail::require(t > 0.0, "invert_laplace: t must be > 0");
    const double coarse = detail::talbot(transform, t, cfg.contour_nodes, cfg.time_scale);
    const double fine = detail::talbot(transform, t, 2 * cfg.contour_nodes, cfg.time_scale);
    if (!std::isfinite(coarse) || std::abs(fine - coarse) > cfg.check_tol * std::max(1.0, std::abs(coarse)))
        throw numeric_error("invert_laplace: unstable inversion at t = " + std::to_string(t));
    return coarse;
}

/// CDF at b of the law with Laplace transform phi, clipped to [0, 1].
template <class F>
double invert_laplace_cdf(F&& phi, double b, const InversionConfig& cfg = {}) {
    auto g = [&](complex s) { return complex(phi(s)) / s; };
    return std::clamp(invert_laplace(g, b, cfg), 0.0, 1.0);
}

}  // namespace looplaw
