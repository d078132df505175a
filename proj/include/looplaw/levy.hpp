#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/formulas.hpp"
#include "looplaw/mc.hpp"
#include "looplaw/rng.hpp"

namespace looplaw {

enum class SmallJumpMode { drift_only, gaussian_approx };

struct LevySimConfig {
    double beta = 1.5;
    double jump_cutoff_eps = 1e-3;
    SmallJumpMode small_jump_mode = SmallJumpMode::gaussian_approx;
    std::uint64_t rng_seed = 0;
    double max_path_time = 1e12;
    // Cutoff grows with the distance d to the next target level, eps * max(1, d / a_first).
    // Off means a fixed eps for the whole path.
    bool adaptive_cutoff = true;
    unsigned threads = default_threads();

    void validate() const {
        detail::require(beta > 1.0 && beta < 2.0, "LevySimConfig: beta must lie in (1,2)");
        detail::require(jump_cutoff_eps > 0.0 && jump_cutoff_eps <= 1.0, "LevySimConfig: eps must lie in (0,1]");
        detail::require(max_path_time > 0.0, "LevySimConfig: max_path_time must be > 0");
    }
};

struct JumpRecord {
    double time;
    double size;
};

struct LevyPath {
    std::vector<JumpRecord> jumps;   // jumps above the record threshold, before the last passage
    std::vector<double> passage_times;  // tau at each requested level, in order
    double tau_a = 0.0;
    double terminal_level = 0.0;
    std::size_t jump_count = 0;      // all simulated jumps, recorded or not
};

namespace detail {

// Phi(-b) / phi(b) for b >= 0
inline double mills_ratio(double b) {
    if (b < 5.0) return 0.5 * std::erfc(b / std::sqrt(2.0)) * std::exp(0.5 * b * b) * std::sqrt(2.0 * pi);
    double f = b;
    for (int k = 40; k >= 1; --k) f = b + k / f;
    return 1.0 / f;
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// P(T <= s) for the first hitting time of 0 from d > 0 by drift -v < 0 plus variance rate s2
inline double inverse_gaussian_cdf(double s, double d, double v, double s2) {
    if (s <= 0.0) return 0.0;
    const double m = d / v, lam = d * d / s2;
    const double r = std::sqrt(lam / s);
    const double a = r * (s / m - 1.0), b = r * (s / m + 1.0);
    return normal_cdf(a) + std::exp(-0.5 * a * a) / std::sqrt(2.0 * pi) * mills_ratio(b);
}

// Hitting time conditioned on T <= horizon, by inverse-CDF bisection.
inline double truncated_passage_time(Rng& rng, double horizon, double d, double v, double s2) {
    const double total = inverse_gaussian_cdf(horizon, d, v, s2);
    const double target = rng.uniform() * total;
    double lo = 0.0, hi = horizon;
    for (int it = 0; it < 80 && hi - lo > 1e-16 * horizon; ++it) {
        const double mid = 0.5 * (lo + hi);
        (inverse_gaussian_cdf(mid, d, v, s2) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Runs one path from 0 until it has passed below -levels.back(); levels must be increasing and positive.
/// Jumps of size >= record_above are kept.
inline LevyPath simulate_to_levels(const std::vector<double>& levels, const LevySimConfig& cfg, Rng& rng,
                                   double record_above = 0.0) {
    cfg.validate();
    detail::require(!levels.empty() && levels.front() > 0.0 && std::is_sorted(levels.begin(), levels.end()),
                    "simulate_to_levels: levels must be positive and increasing");
    const double beta = cfg.beta, eps = cfg.jump_cutoff_eps;
    const bool gauss = cfg.small_jump_mode == SmallJumpMode::gaussian_approx;
    const double a_ref = levels.front();
    LevyPath path;
    double t = 0.0, x = 0.0;
    std::size_t k = 0;
    double cur_eps = -1.0, rate = 0.0, drift = 0.0, s2 = 0.0, inv_beta = -1.0 / beta;
    while (k < levels.size()) {
        const double d = x + levels[k];
        const double e = cfg.adaptive_cutoff ? eps * std::max(1.0, d / a_ref) : eps;
        if (e != cur_eps) {
            cur_eps = e;
            rate = std::pow(e, -beta) / beta;
            drift = std::pow(e, 1.0 - beta) / (beta - 1.0);  // speed of the downward drift
            s2 = gauss ? std::pow(e, 2.0 - beta) / (2.0 - beta) : 0.0;
        }
        // Far from the level: a whole batch of jumps with one Gaussian increment. The window keeps the
        // drift under d/4 and the Brownian scale under d/12, so a crossing inside it needs a 9-sigma
        // excursion (probability < 3e-19, below the resolution of the uniform draws).
        double window = d / (4.0 * drift);
        if (gauss) window = std::min(window, d * d / (144.0 * s2));
        if (rate * window >= 4.0) {
            const auto count = std::poisson_distribution<std::uint64_t>(rate * window)(rng.engine());
            double sum = 0.0;
            const std::size_t first = path.jumps.size();
            for (std::uint64_t j = 0; j < count; ++j) {
                const double size = e * std::pow(rng.uniform(), inv_beta);
                sum += size;
                if (size >= record_above) path.jumps.push_back({t + window * rng.uniform(), size});
            }
            std::sort(path.jumps.begin() + static_cast<std::ptrdiff_t>(first), path.jumps.end(),
                      [](const JumpRecord& l, const JumpRecord& r) { return l.time < r.time; });
            path.jump_count += count;
            x += sum - drift * window + (gauss ? std::sqrt(s2 * window) * rng.normal() : 0.0);
            t += window;
            if (t > cfg.max_path_time)
                throw timeout_error("simulate_to_levels: no passage before max_path_time = " + std::to_string(cfg.max_path_time));
            continue;
        }
        const double dt = rng.exponential(rate);
        bool crossed = false;
        double hit = 0.0;
        double y = d - drift * dt;
        if (!gauss) {
            if (y <= 0.0) {
                crossed = true;
                hit = d / drift;
            }
        } else {
            y += std::sqrt(s2 * dt) * rng.normal();
            if (y <= 0.0) {
                crossed = true;
            } else {
                // Brownian bridge crossing probability; below 2^-54 the uniform can never fall under it
                const double expo = 2.0 * d * y / (s2 * dt);
                if (expo < 38.0 && rng.uniform() < std::exp(-expo)) crossed = true;
            }
            if (crossed) hit = detail::truncated_passage_time(rng, dt, d, drift, s2);
        }
        if (crossed) {
            t += hit;
            x = -levels[k];
            path.passage_times.push_back(t);
            ++k;
            continue;
        }
        t += dt;
        if (t > cfg.max_path_time)
            throw timeout_error("simulate_to_levels: no passage before max_path_time = " + std::to_string(cfg.max_path_time));
        const double size = e * std::pow(rng.uniform(), inv_beta);
        x = y - levels[k] + size;
        ++path.jump_count;
        if (size >= record_above) path.jumps.push_back({t, size});
    }
    path.tau_a = path.passage_times.back();
    path.terminal_level = x;
    return path;
}

/// Path run to first passage below -a.
inline LevyPath simulate_to_hitting(double a, const LevySimConfig& cfg, Rng& rng, double record_above = 0.0) {
    detail::require(a > 0.0, "simulate_to_hitting: a must be > 0");
    return simulate_to_levels({a}, cfg, rng, record_above);
}

/// Passage times at every level for n replicas seeded from cfg.rng_seed.
inline std::vector<std::vector<double>> simulate_passages(const std::vector<double>& levels, const LevySimConfig& cfg,
                                                          std::size_t n) {
    return run_replicas<std::vector<double>>(
        n, cfg.rng_seed,
        [&](Rng& rng, std::size_t) {
            return simulate_to_levels(levels, cfg, rng, std::numeric_limits<double>::infinity()).passage_times;
        },
        cfg.threads);
}

/// E[tau_{-a} / tau_{-a-b}]; target a / (a + b).
inline MCEstimate estimate_tau_ratio(double a, double b, const LevySimConfig& cfg, std::size_t n) {
    detail::require(n >= 100, "estimate_tau_ratio: need n >= 100");
    detail::require(a > 0.0 && b >= 0.0, "estimate_tau_ratio: need a > 0, b >= 0");
    if (b == 0.0) return {1.0, 0.0, n};
    const auto pt = simulate_passages({a, a + b}, cfg, n);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = pt[i][0] / pt[i][1];
    return summarize(r);
}

/// Ratio estimates for consecutive levels from one set of paths: entry j is E[tau(levels[j]) / tau(levels[j+1])].
inline std::vector<MCEstimate> estimate_tau_ratios_shared(const std::vector<double>& levels, const LevySimConfig& cfg,
                                                          std::size_t n) {
    detail::require(n >= 100, "estimate_tau_ratios_shared: need n >= 100");
    const auto pt = simulate_passages(levels, cfg, n);
    std::vector<MCEstimate> out;
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = pt[i][j] / pt[i][j + 1];
        out.push_back(summarize(r));
    }
    return out;
}

inline double inverse_mean_target(double beta) { return pi / sin_pi(-beta); }

/// E[1 / tau_{-1}]; target pi / sin(-pi beta).
inline MCEstimate estimate_inverse_mean(const LevySimConfig& cfg, std::size_t n) {
    detail::require(n >= 100, "estimate_inverse_mean: need n >= 100");
    const auto pt = simulate_passages({1.0}, cfg, n);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = 1.0 / pt[i][0];
    return summarize(r);
}

struct JumpHistogram {
    DensityCurve curve;  // bin midpoints and densities
    std::vector<HistogramBin> bins;
    std::vector<std::vector<double>> covariance;
    MCEstimate inverse_tau;
    bool below_cutoff_warning = false;
};

/// Jump sizes weighted by 1/tau_{-a} and self-normalized by the mean of 1/tau_{-a}.
inline JumpHistogram weighted_jump_histogram(double a, const std::vector<double>& edges, const LevySimConfig& cfg,
                                             std::size_t n) {
    detail::require(a > 0.0, "weighted_jump_histogram: a must be > 0");
    detail::require(edges.size() >= 2 && edges.front() > 0.0, "weighted_jump_histogram: need positive edges");
    JumpHistogram h;
    h.below_cutoff_warning = edges.front() < 10.0 * cfg.jump_cutoff_eps;
    struct Rep {
        std::vector<WeightedSample> s;
        double w;
    };
    const auto reps = run_replicas<Rep>(
        n, cfg.rng_seed,
        [&](Rng& rng, std::size_t) {
            const auto p = simulate_to_hitting(a, cfg, rng, edges.front());
            Rep r;
            r.w = 1.0 / p.tau_a;
            for (const auto& j : p.jumps)
                if (j.size < edges.back()) r.s.push_back({j.size, r.w});
            return r;
        },
        cfg.threads);
    std::vector<std::vector<WeightedSample>> samples(n);
    std::vector<double> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
        samples[i] = reps[i].s;
        norm[i] = reps[i].w;
    }
    h.inverse_tau = summarize(norm);
    auto wh = weighted_histogram(samples, norm, edges);
    h.bins = std::move(wh.bins);
    h.covariance = std::move(wh.covariance);
    for (const auto& b : h.bins) {
        h.curve.abscissae.push_back(0.5 * (b.lo + b.hi));
        h.curve.values.push_back(b.density);
    }
    return h;
}

/// Expected value of levy_jump_density averaged over [lo, hi].
inline double levy_jump_bin_average(double beta, double a, double lo, double hi) {
    auto f = [&](double b) { return levy_jump_density(beta, a, b); };
    return integrate(f, lo, hi).value / (hi - lo);
}

/// Chi-square statistic of bin estimates against targets with the full bin covariance.
inline double chi_square_statistic(const std::vector<HistogramBin>& bins, const std::vector<std::vector<double>>& cov,
                                   const std::vector<double>& targets) {
    std::vector<double> d(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) d[i] = bins[i].density - targets[i];
    return mahalanobis_squared(d, cov);
}

}  // namespace looplaw
