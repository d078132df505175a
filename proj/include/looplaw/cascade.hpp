#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/formulas.hpp"
#include "looplaw/levy.hpp"
#include "looplaw/mc.hpp"

namespace looplaw {

/// Ranked outermost-loop lengths of one first-passage path, weighted by 1/tau.
struct LoopLengthSample {
    std::vector<double> lengths;  // decreasing
    double weight = 0.0;
    double boundary_length_a = 0.0;
};

/// Lengths below min_length are not kept (pass 0 to keep every simulated jump).
inline std::vector<LoopLengthSample> sample_outermost_lengths(double a, const LevySimConfig& cfg, std::size_t n,
                                                              double min_length = 0.0) {
    detail::require(a > 0.0, "sample_outermost_lengths: a must be > 0");
    return run_replicas<LoopLengthSample>(
        n, cfg.rng_seed,
        [&](Rng& rng, std::size_t) {
            const auto p = simulate_to_hitting(a, cfg, rng, min_length);
            LoopLengthSample s;
            s.boundary_length_a = a;
            s.weight = 1.0 / p.tau_a;
            s.lengths.reserve(p.jumps.size());
            for (const auto& j : p.jumps) s.lengths.push_back(j.size);
            std::sort(s.lengths.begin(), s.lengths.end(), std::greater<>());
            return s;
        },
        cfg.threads);
}

struct LoopDensityReport {
    std::vector<HistogramBin> bins;
    std::vector<std::vector<double>> covariance;
    std::vector<double> target_levy;  // bin averages of levy_jump_density
    std::vector<double> target_qd;    // bin averages of the disk-ratio form
    double max_rel_discrepancy = 0.0;
    double max_abs_z = 0.0;
    double chi_square = 0.0;
    double p_value = 0.0;
    bool within_3se = true;
    bool underpopulated_warning = false;
    bool below_cutoff_warning = false;
};

/// Uniformly chosen outermost-loop density on the bins, against both closed forms.
inline LoopDensityReport loop_length_density_check(double a, const std::vector<double>& edges, const LevySimConfig& cfg,
                                                   std::size_t n) {
    detail::require(edges.size() >= 2 && edges.front() > 0.0, "loop_length_density_check: need positive edges");
    LoopDensityReport r;
    r.below_cutoff_warning = edges.front() < 10.0 * cfg.jump_cutoff_eps;
    const auto samples = sample_outermost_lengths(a, cfg, n, edges.front());
    std::vector<std::vector<WeightedSample>> ws(n);
    std::vector<double> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
        norm[i] = samples[i].weight;
        for (double l : samples[i].lengths)
            if (l < edges.back()) ws[i].push_back({l, samples[i].weight});
    }
    auto wh = weighted_histogram(ws, norm, edges);
    r.bins = std::move(wh.bins);
    r.covariance = std::move(wh.covariance);
    for (const auto& b : r.bins) {
        r.target_levy.push_back(levy_jump_bin_average(cfg.beta, a, b.lo, b.hi));
        auto f = [&](double x) { return levy_jump_density_qd_form(cfg.beta, a, x); };
        r.target_qd.push_back(integrate(f, b.lo, b.hi).value / (b.hi - b.lo));
        if (b.effective_count < 50.0) r.underpopulated_warning = true;
    }
    for (std::size_t i = 0; i < r.bins.size(); ++i) {
        const double z = (r.bins[i].density - r.target_levy[i]) / r.bins[i].stderr;
        r.max_abs_z = std::max(r.max_abs_z, std::abs(z));
        r.max_rel_discrepancy = std::max(r.max_rel_discrepancy, std::abs(r.bins[i].density / r.target_levy[i] - 1.0));
        if (std::abs(z) > 3.0) r.within_3se = false;
    }
    r.chi_square = chi_square_statistic(r.bins, r.covariance, r.target_levy);
    r.p_value = chi_square_p_value(r.chi_square, static_cast<double>(r.bins.size()));
    return r;
}

}  // namespace looplaw
