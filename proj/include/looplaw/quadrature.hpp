#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "looplaw/errors.hpp"

namespace looplaw {

struct QuadratureConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    double truncation_bound = 1e3;  // upper limit used by truncated semi-infinite integrals

    void validate() const {
        detail::require(abs_tol > 0, "QuadratureConfig: abs_tol must be > 0");
        detail::require(rel_tol > 0, "QuadratureConfig: rel_tol must be > 0");
        detail::require(max_subdivisions >= 1, "QuadratureConfig: max_subdivisions must be >= 1");
        detail::require(truncation_bound > 0, "QuadratureConfig: truncation_bound must be > 0");
    }

    [[nodiscard]] QuadratureConfig tightened(double factor) const {
        QuadratureConfig c = *this;
        c.abs_tol *= factor;
        c.rel_tol *= factor;
        c.max_subdivisions *= 2;
        return c;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600881916360, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_21(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[10];
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    const double value = kron * h;
    double err = std::abs((kron - gauss) * h);
    if (!std::isfinite(value)) throw numeric_error("quadrature: non-finite integrand value");
    return {a, b, value, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature on a finite interval.
/// Throws numeric_error when the tolerance is not met within the subdivision budget.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    cfg.validate();
    if (a == b) return {};
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::priority_queue<detail::Panel> heap;
    auto first = detail::gauss_kronrod_21(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int count = 1;
    const double min_width = 64 * std::numeric_limits<double>::epsilon() * (b - a);
    double frozen_err = 0.0;
    double frozen_value = 0.0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (count >= cfg.max_subdivisions || heap.empty()) {
            throw numeric_error("quadrature did not converge: estimate " + std::to_string(total) +
                                " error " + std::to_string(total_err));
        }
        auto worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < min_width) {
            // roundoff floor: accept this panel as is
            frozen_err += worst.error;
            frozen_value += worst.value;
            total_err -= worst.error;
            if (frozen_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) * 10)
                throw numeric_error("quadrature hit the roundoff floor");
            continue;
        }
        const double m = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_21(f, worst.a, m);
        auto right = detail::gauss_kronrod_21(f, m, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    // re-sum to shed accumulated cancellation in the running total
    double resum = frozen_value, err = frozen_err;
    while (!heap.empty()) {
        resum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {sign * resum, err, count};
}

/// Integral over [a, inf) through the map x = a + t/(1-t).
template <class F>
QuadratureResult integrate_to_infinity(F&& f, double a, const QuadratureConfig& cfg = {}) {
    auto g = [&](double t) {
        const double u = 1.0 - t;
        if (u <= 0.0) return 0.0;
        const double x = a + t / u;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v / (u * u);
    };
    return integrate(g, 0.0, 1.0, cfg);
}

/// Integral over [a, b] split at interior breakpoints.
template <class F>
QuadratureResult integrate_piecewise(F&& f, const std::vector<double>& knots, const QuadratureConfig& cfg = {}) {
    QuadratureResult out;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        auto r = integrate(f, knots[i], knots[i + 1], cfg);
        out.value += r.value;
        out.error += r.error;
        out.intervals += r.intervals;
    }
    return out;
}

}  // namespace looplaw
