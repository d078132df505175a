#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/formulas.hpp"
#include "looplaw/laplace.hpp"
#include "looplaw/mc.hpp"
#include "looplaw/params.hpp"
#include "looplaw/rng.hpp"

namespace looplaw {

/// Tabulated CDF of a gap B with an exponential tail beyond the last node.
struct CRGapLaw {
    double kappa = 0.0;
    DensityCurve tabulated_cdf;  // abscissae b (nondecreasing), values F(b)
    double tail_rate = 0.0;      // P(B > b) ~ exp(-tail_rate b) past the last node; 0 means no tail
};

struct CRGridConfig {
    std::size_t nodes = 2048;
    double b_min = 1e-4;
    double tail_target = 0.999;  // F at the last node must reach this
};

/// Numerical inversion of lambda -> E[CR^lambda] on a log grid.
inline CRGapLaw build_cr_gap_law(const LQGParams& p, const CRGridConfig& grid = {}, const InversionConfig& inv = {}) {
    const double k = p.loop_kappa();
    detail::require(k > 8.0 / 3.0 && k < 8.0, "build_cr_gap_law: kappa must lie in (8/3,8)");
    detail::require(grid.nodes >= 2 && grid.b_min > 0.0, "build_cr_gap_law: bad grid");
    auto phi = [&](complex s) { return ssw_cr_moment(p, s); };
    CRGapLaw law;
    law.kappa = k;
    law.tail_rate = -ssw_cr_threshold(p);
    double b_max = std::max(20.0, 10.0 / law.tail_rate);
    while (invert_laplace_cdf(phi, b_max, inv) < grid.tail_target) {
        b_max *= 1.5;
        if (b_max > 1e6) throw numeric_error("build_cr_gap_law: CDF does not reach the tail target");
    }
    const double step = std::log(b_max / grid.b_min) / static_cast<double>(grid.nodes - 1);
    double prev = 0.0;
    for (std::size_t i = 0; i < grid.nodes; ++i) {
        const double b = i + 1 == grid.nodes ? b_max : grid.b_min * std::exp(step * static_cast<double>(i));
        double f = invert_laplace_cdf(phi, b, inv);
        if (f < prev - 1e-6) throw numeric_error("build_cr_gap_law: inverted CDF is not monotone at b = " + std::to_string(b));
        f = std::max(f, prev);
        prev = f;
        law.tabulated_cdf.abscissae.push_back(b);
        law.tabulated_cdf.values.push_back(f);
    }
    return law;
}

/// Point mass at g, for deterministic renewal checks.
inline CRGapLaw point_mass_gap_law(double g) {
    detail::require(g > 0.0, "point_mass_gap_law: g must be > 0");
    CRGapLaw law;
    law.tabulated_cdf.abscissae = {g, g};
    law.tabulated_cdf.values = {0.0, 1.0};
    return law;
}

inline void validate_gap_law(const CRGapLaw& law) {
    const auto& b = law.tabulated_cdf.abscissae;
    const auto& f = law.tabulated_cdf.values;
    detail::require(!b.empty() && b.size() == f.size(), "CRGapLaw: empty or mismatched table");
    for (std::size_t i = 0; i < b.size(); ++i) {
        detail::require(f[i] >= 0.0 && f[i] <= 1.0, "CRGapLaw: CDF outside [0,1]");
        if (i > 0) detail::require(b[i] >= b[i - 1] && f[i] >= f[i - 1], "CRGapLaw: table not monotone");
    }
    detail::require(b.front() > 0.0, "CRGapLaw: abscissae must be positive");
}

/// F(b), linear between nodes and from (0, 0) to the first node.
inline double gap_cdf(const CRGapLaw& law, double b) {
    const auto& xs = law.tabulated_cdf.abscissae;
    const auto& fs = law.tabulated_cdf.values;
    if (b <= 0.0) return 0.0;
    if (b >= xs.back()) {
        const double rest = 1.0 - fs.back();
        return law.tail_rate > 0.0 ? 1.0 - rest * std::exp(-law.tail_rate * (b - xs.back())) : 1.0;
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), b);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double x0 = i == 0 ? 0.0 : xs[i - 1], f0 = i == 0 ? 0.0 : fs[i - 1];
    return f0 + (fs[i] - f0) * (b - x0) / (xs[i] - x0);
}

/// Inverse-CDF draw: bisection over the table, linear inside a cell, exponential past the end.
inline double sample_log_cr_gap(const CRGapLaw& law, Rng& rng) {
    const auto& xs = law.tabulated_cdf.abscissae;
    const auto& fs = law.tabulated_cdf.values;
    const double u = rng.uniform();
    if (u > fs.back()) {
        if (law.tail_rate > 0.0) return xs.back() + rng.exponential(law.tail_rate);
        return xs.back();
    }
    std::size_t lo = 0, hi = fs.size() - 1;  // first index with fs >= u lies in [lo, hi]
    if (fs[0] >= u) {
        hi = 0;
    } else {
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (fs[mid] >= u ? hi : lo) = mid;
        }
    }
    const double x0 = hi == 0 ? 0.0 : xs[hi - 1], f0 = hi == 0 ? 0.0 : fs[hi - 1];
    if (fs[hi] == f0) return xs[hi];
    return x0 + (u - f0) / (fs[hi] - f0) * (xs[hi] - x0);
}

/// E[exp(-lambda B)] from the tabulated law, integrating lambda e^{-lambda b} F(b) exactly on each linear piece.
inline double gap_law_transform(const CRGapLaw& law, double lambda) {
    detail::require(lambda > 0.0, "gap_law_transform: lambda must be > 0");
    const auto& xs = law.tabulated_cdf.abscissae;
    const auto& fs = law.tabulated_cdf.values;
    double sum = 0.0, x0 = 0.0, f0 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x1 = xs[i], f1 = fs[i];
        // a jump in F (x1 == x0) adds nothing to this form
        if (x1 > x0) {
            const double e0 = std::exp(-lambda * x0), e1 = std::exp(-lambda * x1);
            const double slope = (f1 - f0) / (x1 - x0);
            sum += f0 * (e0 - e1) + slope * (-(x1 - x0) * e1 + (e0 - e1) / lambda);
        }
        x0 = x1;
        f0 = f1;
    }
    const double rest = 1.0 - f0, e = std::exp(-lambda * x0);
    sum += law.tail_rate > 0.0 ? e * (1.0 - rest * lambda / (lambda + law.tail_rate)) : e * (1.0 - rest);
    return sum;
}

/// E[B] = integral of 1 - F.
inline double gap_law_mean(const CRGapLaw& law) {
    const auto& xs = law.tabulated_cdf.abscissae;
    const auto& fs = law.tabulated_cdf.values;
    double sum = 0.0, x0 = 0.0, f0 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sum += (xs[i] - x0) * (1.0 - 0.5 * (f0 + fs[i]));
        x0 = xs[i];
        f0 = fs[i];
    }
    if (law.tail_rate > 0.0) sum += (1.0 - f0) / law.tail_rate;
    return sum;
}

/// -d/dlambda E[CR^lambda] at 0 by a five-point central difference.
inline double cr_mean_from_moment(const LQGParams& p, double h = 1e-4) {
    auto f = [&](double l) { return ssw_cr_moment(p, l); };
    return -(-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
}

struct RenewalEstimate {
    MCEstimate rate;
    bool short_horizon_warning = false;  // C < 10 E[B]
};

/// Mean of N(C)/C with N(C) = max{n : B_1 + ... + B_n <= C}.
inline RenewalEstimate estimate_renewal_rate(const CRGapLaw& law, double c, std::size_t replicas, std::uint64_t seed,
                                             unsigned threads = default_threads()) {
    validate_gap_law(law);
    detail::require(c > 0.0, "estimate_renewal_rate: C must be > 0");
    detail::require(replicas >= 2, "estimate_renewal_rate: need at least two replicas");
    RenewalEstimate out;
    out.short_horizon_warning = c < 10.0 * gap_law_mean(law);
    const auto v = run_replicas<double>(
        replicas, seed,
        [&](Rng& rng, std::size_t) {
            double s = 0.0;
            std::size_t count = 0;
            for (;;) {
                s += sample_log_cr_gap(law, rng);
                if (s > c) break;
                ++count;
            }
            return static_cast<double>(count) / c;
        },
        threads);
    out.rate = summarize(v);
    return out;
}

inline std::string cr_law_to_csv(const CRGapLaw& law) {
    std::ostringstream os;
    os.precision(17);
    os << "b,F\n";
    for (std::size_t i = 0; i < law.tabulated_cdf.abscissae.size(); ++i)
        os << law.tabulated_cdf.abscissae[i] << ',' << law.tabulated_cdf.values[i] << '\n';
    return os.str();
}

}  // namespace looplaw
