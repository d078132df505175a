#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/rng.hpp"
#include "looplaw/specfun.hpp"

namespace looplaw {

struct MCEstimate {
    double mean = 0.0;
    double stderr = 0.0;
    std::size_t n_replicas = 0;
};

inline MCEstimate summarize(const std::vector<double>& xs) {
    detail::require(xs.size() >= 2, "summarize: need at least two replicas");
    MCEstimate e;
    e.n_replicas = xs.size();
    double m = 0.0, s = 0.0;
    std::size_t k = 0;
    for (double x : xs) {
        ++k;
        const double d = x - m;
        m += d / static_cast<double>(k);
        s += d * (x - m);
    }
    e.mean = m;
    e.stderr = std::sqrt(s / static_cast<double>(k - 1) / static_cast<double>(k));
    return e;
}

/// Ratio-of-means estimate sum(num)/sum(den) with delta-method standard error.
inline MCEstimate summarize_ratio(const std::vector<double>& num, const std::vector<double>& den) {
    detail::require(num.size() == den.size() && num.size() >= 2, "summarize_ratio: size mismatch");
    const auto a = summarize(num), b = summarize(den);
    detail::require(b.mean != 0.0, "summarize_ratio: zero denominator");
    const double r = a.mean / b.mean;
    double s = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        const double z = num[i] - r * den[i];
        s += z * z;
    }
    const double n = static_cast<double>(num.size());
    return {r, std::sqrt(s / (n - 1.0) / n) / std::abs(b.mean), num.size()};
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs fn(rng, i) for i in [0, n) and returns results in replica order.
/// Each replica gets Rng(seed, i), so the output does not depend on the thread count.
template <class T, class Fn>
std::vector<T> run_replicas(std::size_t n, std::uint64_t seed, Fn&& fn, unsigned threads = default_threads()) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                Rng rng(seed, i);
                out[i] = fn(rng, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
                return;
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Upper tail probability of a chi-square statistic.
inline double chi_square_p_value(double statistic, double dof) {
    detail::require(dof > 0.0, "chi_square_p_value: dof must be > 0");
    if (statistic <= 0.0) return 1.0;
    return upper_gamma_q(0.5 * dof, 0.5 * statistic);
}

struct WeightedSample {
    double value;
    double weight;
};

struct HistogramBin {
    double lo, hi;
    double density;  // normalized weight per unit length
    double stderr;   // replica-level delta-method error of density
    double effective_count;
};

struct WeightedHistogram {
    std::vector<HistogramBin> bins;
    std::vector<std::vector<double>> covariance;  // of the bin densities, delta method over replicas
};

/// Self-normalized histogram: per-replica weighted values over the total replica weight.
/// norm[i] is the weight replica i carries in the denominator.
inline WeightedHistogram weighted_histogram(const std::vector<std::vector<WeightedSample>>& replicas,
                                            const std::vector<double>& norm, const std::vector<double>& edges) {
    detail::require(replicas.size() == norm.size() && replicas.size() >= 2, "weighted_histogram: size mismatch");
    detail::require(edges.size() >= 2 && std::is_sorted(edges.begin(), edges.end()), "weighted_histogram: bad edges");
    const std::size_t nb = edges.size() - 1, n = replicas.size();
    std::vector<std::vector<double>> per(nb, std::vector<double>(n, 0.0));
    std::vector<double> w_sum(nb, 0.0), w2_sum(nb, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& s : replicas[i]) {
            if (s.value < edges.front() || s.value >= edges.back()) continue;
            const auto it = std::upper_bound(edges.begin(), edges.end(), s.value);
            const std::size_t b = static_cast<std::size_t>(it - edges.begin()) - 1;
            per[b][i] += s.weight;
            w_sum[b] += s.weight;
            w2_sum[b] += s.weight * s.weight;
        }
    const double norm_mean = summarize(norm).mean;
    detail::require(norm_mean > 0.0, "weighted_histogram: normalizer must be positive");
    WeightedHistogram h;
    std::vector<std::vector<double>> infl(nb, std::vector<double>(n));
    for (std::size_t b = 0; b < nb; ++b) {
        const auto r = summarize_ratio(per[b], norm);
        const double width = edges[b + 1] - edges[b];
        const double eff = w2_sum[b] > 0.0 ? w_sum[b] * w_sum[b] / w2_sum[b] : 0.0;
        h.bins.push_back({edges[b], edges[b + 1], r.mean / width, r.stderr / width, eff});
        for (std::size_t i = 0; i < n; ++i) infl[b][i] = (per[b][i] - r.mean * norm[i]) / (norm_mean * width);
    }
    const double dn = static_cast<double>(n);
    h.covariance.assign(nb, std::vector<double>(nb, 0.0));
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t c = 0; c <= b; ++c) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += infl[b][i] * infl[c][i];
            h.covariance[b][c] = h.covariance[c][b] = s / ((dn - 1.0) * dn);
        }
    return h;
}

/// d^T S^{-1} d by Cholesky; S must be symmetric positive definite.
inline double mahalanobis_squared(const std::vector<double>& d, std::vector<std::vector<double>> s) {
    const std::size_t k = d.size();
    detail::require(s.size() == k, "mahalanobis_squared: dimension mismatch");
    for (std::size_t j = 0; j < k; ++j) {
        double diag = s[j][j];
        for (std::size_t m = 0; m < j; ++m) diag -= s[j][m] * s[j][m];
        if (!(diag > 0.0)) throw numeric_error("mahalanobis_squared: covariance is not positive definite");
        s[j][j] = std::sqrt(diag);
        for (std::size_t i = j + 1; i < k; ++i) {
            double v = s[i][j];
            for (std::size_t m = 0; m < j; ++m) v -= s[i][m] * s[j][m];
            s[i][j] = v / s[j][j];
        }
    }
    double out = 0.0;
    std::vector<double> y(k);
    for (std::size_t i = 0; i < k; ++i) {
        double v = d[i];
        for (std::size_t m = 0; m < i; ++m) v -= s[i][m] * y[m];
        y[i] = v / s[i][i];
        out += y[i] * y[i];
    }
    return out;
}

}  // namespace looplaw
