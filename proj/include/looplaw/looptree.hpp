#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/mc.hpp"
#include "looplaw/rng.hpp"
#include "looplaw/specfun.hpp"

namespace looplaw {

/// Walk increments >= -1 whose partial sums stay >= 0 until the last step reaches -1.
struct DiscreteExcursion {
    std::vector<int> steps;
    std::size_t n = 0;
    double scale = 1.0;  // multiplies jump sizes
};

inline constexpr int root_parent = -1;

struct LoopRecord {
    double length;
    int parent;       // loop index, or root_parent
    double position;  // counterclockwise distance along the parent from its root, in [0, parent length)
};

struct Looptree {
    std::vector<LoopRecord> loops;  // in order of the opening jumps
    double total_boundary = 0.0;
};

/// Step law P(-1) = q, P(k) = (1-q) k^(-nu-1) / zeta(nu+1) for k >= 1, with q fixing the mean at 0.
struct StepLaw {
    double nu = 1.5;
    double q = 0.0;
    double jump_coefficient = 0.0;  // (1-q) / zeta(nu+1), so P(k) = jump_coefficient * k^(-nu-1)

    explicit StepLaw(double nu_) : nu(nu_) {
        detail::require(nu > 1.0 && nu < 2.0, "StepLaw: nu must lie in (1,2)");
        const double m = riemann_zeta(nu) / riemann_zeta(nu + 1.0);
        q = m / (1.0 + m);
        jump_coefficient = (1.0 - q) / riemann_zeta(nu + 1.0);
    }

    /// Jump scale for a walk of T steps normalized to unit duration, Levy measure x^(-nu-1) / Gamma(-nu).
    [[nodiscard]] double duration_scale(double steps) const {
        return std::pow(steps * jump_coefficient * gamma_fn(-nu), -1.0 / nu);
    }
};

namespace detail {

// Zipf(s) on {1, 2, ...} by Devroye's rejection method
inline std::uint64_t sample_zipf(Rng& rng, double s) {
    const double b = std::pow(2.0, s - 1.0);
    for (;;) {
        const double u = rng.uniform(), v = rng.uniform();
        const double x = std::floor(std::pow(u, -1.0 / (s - 1.0)));
        if (!(x < 9.0e15)) continue;
        const double t = std::pow(1.0 + 1.0 / x, s - 1.0);
        if (v * x * (t - 1.0) / (b - 1.0) <= t / b) return static_cast<std::uint64_t>(x);
    }
}

inline long long sample_step(Rng& rng, const StepLaw& law) {
    if (rng.uniform() < law.q) return -1;
    return static_cast<long long>(sample_zipf(rng, law.nu + 1.0));
}

}  // namespace detail

/// Rotation start making a sum -1 skip-free bridge a first-passage path; throws unless exactly one start works.
inline std::size_t cycle_lemma_rotation(const std::vector<int>& bridge) {
    const std::size_t n = bridge.size();
    std::vector<long long> P(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) P[i + 1] = P[i] + bridge[i];
    if (n == 0 || P[n] != -1) throw domain_error("cycle_lemma_rotation: bridge must sum to -1");
    // start r works iff P[r] <= P[j] for j > r and P[r] < P[j] for j < r
    std::vector<long long> suffix_min(n + 1);
    suffix_min[n] = P[n];
    for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(P[i], suffix_min[i + 1]);
    long long prefix_min = std::numeric_limits<long long>::max();
    std::size_t count = 0, start = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        prefix_min = std::min(prefix_min, P[r - 1]);
        if (P[r] <= suffix_min[r] && P[r] < prefix_min) {
            ++count;
            start = r % n;
        }
    }
    if (count != 1) throw numeric_error("cycle_lemma_rotation: rotation is not unique");
    return start;
}

inline bool is_valid_excursion(const std::vector<int>& steps) {
    long long s = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] < -1) return false;
        s += steps[i];
        if (i + 1 < steps.size() && s < 0) return false;
    }
    return !steps.empty() && s == -1;
}

/// Excursion of exactly n steps: bridge to -1 by rejection, then the cycle-lemma rotation.
inline DiscreteExcursion sample_excursion(double nu, std::size_t n, Rng& rng, std::size_t max_attempts = 1000000) {
    detail::require(n >= 100, "sample_excursion: need n >= 100");
    const StepLaw law(nu);
    std::vector<int> bridge(n);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        long long sum = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const long long v = detail::sample_step(rng, law);
            // a partial sum above n can never come back to -1
            if (v > static_cast<long long>(n)) {
                ok = false;
                break;
            }
            bridge[i] = static_cast<int>(v);
            sum += v;
        }
        if (!ok || sum != -1) continue;
        const std::size_t r = cycle_lemma_rotation(bridge);
        DiscreteExcursion e;
        e.n = n;
        e.steps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) e.steps.push_back(bridge[(r + i) % n]);
        e.scale = law.duration_scale(static_cast<double>(n));
        return e;
    }
    throw numeric_error("sample_excursion: no bridge within " + std::to_string(max_attempts) + " attempts");
}

/// First-passage path of the walk to -1, accepted when its length lies in [n_min, n_max]; scaled to unit duration.
inline DiscreteExcursion sample_excursion_in_window(double nu, std::size_t n_min, std::size_t n_max, Rng& rng,
                                                    std::size_t max_attempts = 100000000) {
    detail::require(n_min >= 1 && n_max >= n_min, "sample_excursion_in_window: bad window");
    const StepLaw law(nu);
    std::vector<int> steps;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        steps.clear();
        long long s = 0;
        bool ok = true;
        while (s >= 0) {
            const long long v = detail::sample_step(rng, law);
            // the walk needs s + v + 1 more unit steps down to reach -1
            if (static_cast<long long>(steps.size()) + 1 + s + v + 1 > static_cast<long long>(n_max)) {
                ok = false;
                break;
            }
            steps.push_back(static_cast<int>(v));
            s += v;
        }
        if (!ok || steps.size() < n_min) continue;
        DiscreteExcursion e;
        e.n = steps.size();
        e.steps = steps;
        e.scale = law.duration_scale(static_cast<double>(e.n));
        return e;
    }
    throw numeric_error("sample_excursion_in_window: budget exhausted");
}

/// Stack scan: a jump opens a loop, which closes when the walk returns to the pre-jump level.
/// A new jump attaches to the innermost open loop at the current height.
inline Looptree build_looptree(const DiscreteExcursion& e) {
    if (!is_valid_excursion(e.steps)) throw domain_error("build_looptree: malformed excursion");
    struct Open {
        int index;
        long long base, top;
    };
    Looptree t;
    std::vector<Open> stack;
    long long s = 0;
    for (int v : e.steps) {
        if (v > 0) {
            const int parent = stack.empty() ? root_parent : stack.back().index;
            const double pos = stack.empty() ? 0.0 : static_cast<double>(stack.back().top - s) * e.scale;
            const int idx = static_cast<int>(t.loops.size());
            t.loops.push_back({v * e.scale, parent, pos});
            stack.push_back({idx, s, s + v});
            s += v;
        } else {
            s += v;
            while (!stack.empty() && s == stack.back().base) stack.pop_back();
        }
    }
    if (!stack.empty()) throw domain_error("build_looptree: loops left open at the end");
    t.total_boundary = 1.0;
    return t;
}

/// Same quotient by pairwise comparison: the parent of the jump at step t is the latest earlier jump s whose
/// vertical segment is reached by a horizontal line from (t-1, S(t-1)) that stays below the graph.
inline Looptree build_looptree_pairwise(const DiscreteExcursion& e) {
    if (!is_valid_excursion(e.steps)) throw domain_error("build_looptree_pairwise: malformed excursion");
    const std::size_t n = e.steps.size();
    std::vector<long long> S(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) S[i + 1] = S[i] + e.steps[i];
    std::vector<int> loop_of_step(n, -1);
    Looptree t;
    for (std::size_t i = 0; i < n; ++i) {
        if (e.steps[i] <= 0) continue;
        const long long h = S[i];  // height just before the jump
        int parent = root_parent;
        double pos = 0.0;
        for (std::size_t j = i; j-- > 0;) {
            if (e.steps[j] <= 0) continue;
            if (!(S[j] < h && h <= S[j + 1])) continue;
            bool below = true;
            for (std::size_t u = j + 1; u <= i; ++u)
                if (S[u] < h) {
                    below = false;
                    break;
                }
            if (below) {
                parent = loop_of_step[j];
                pos = static_cast<double>(S[j + 1] - h) * e.scale;
                break;
            }
        }
        loop_of_step[i] = static_cast<int>(t.loops.size());
        t.loops.push_back({e.steps[i] * e.scale, parent, pos});
    }
    t.total_boundary = 1.0;
    return t;
}

inline std::string looptree_to_dot(const Looptree& t) {
    std::ostringstream os;
    os.precision(17);
    os << "digraph looptree {\n  root [shape=point];\n";
    for (std::size_t i = 0; i < t.loops.size(); ++i)
        os << "  L" << i << " [label=\"" << t.loops[i].length << "\"];\n";
    for (std::size_t i = 0; i < t.loops.size(); ++i) {
        const auto& l = t.loops[i];
        os << "  " << (l.parent == root_parent ? std::string("root") : "L" + std::to_string(l.parent)) << " -> L" << i
           << " [label=\"" << l.position << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

/// E[sum of (scaled jump)^p] over unit-duration excursions, lengths drawn from [n, 2n].
inline MCEstimate estimate_jump_moment(double nu, double p, std::size_t n, std::size_t replicas, std::uint64_t seed,
                                       unsigned threads = default_threads()) {
    detail::require(p > nu, "estimate_jump_moment: need p > nu for a finite moment");
    detail::require(replicas >= 2, "estimate_jump_moment: need at least two replicas");
    const auto v = run_replicas<double>(
        replicas, seed,
        [&](Rng& rng, std::size_t) {
            const auto e = sample_excursion_in_window(nu, n, 2 * n, rng);
            double s = 0.0;
            for (int k : e.steps)
                if (k > 0) s += std::pow(k * e.scale, p);
            return s;
        },
        threads);
    return summarize(v);
}

}  // namespace looplaw
