#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "looplaw/errors.hpp"
#include "looplaw/formulas.hpp"
#include "looplaw/levy.hpp"
#include "looplaw/params.hpp"
#include "looplaw/specfun.hpp"

namespace looplaw {

using ParamMap = std::map<std::string, double>;

/// "lqg" in a parameter list stands for one of kappa, gamma or gamma2.
struct FormulaEntry {
    std::string name;
    std::vector<std::string> params;
    std::string anchor;
    std::function<double(const ParamMap&)> fn;
};

namespace detail {

inline double get(const ParamMap& m, const std::string& key) {
    const auto it = m.find(key);
    if (it == m.end()) throw domain_error("missing parameter --" + key);
    return it->second;
}

inline LQGParams lqg_from(const ParamMap& m) {
    if (m.count("kappa")) return from_kappa(m.at("kappa"));
    if (m.count("gamma")) return from_gamma(m.at("gamma"));
    if (m.count("gamma2")) {
        const double g2 = m.at("gamma2");
        require(g2 > 0.0, "gamma2 must be > 0");
        return from_gamma(std::sqrt(g2));
    }
    throw domain_error("missing parameter: one of --kappa, --gamma, --gamma2");
}

inline AlphaParams alpha_from(const ParamMap& m) { return make_alpha(lqg_from(m), get(m, "alpha")); }

inline double constant(ConstantId id, const ParamMap& m) {
    ConstantArgs a{lqg_from(m), {}, {}};
    if (m.count("alpha")) a.alpha = m.at("alpha");
    if (m.count("mu")) a.mu = m.at("mu");
    return eval_constant(id, a);
}

}  // namespace detail

inline const std::vector<FormulaEntry>& formula_registry() {
    using detail::alpha_from;
    using detail::get;
    using detail::lqg_from;
    using M = const ParamMap&;
    static const std::vector<FormulaEntry> list = {
        {"thickness-mgf", {"lqg", "lambda"}, "thickness-mgf", [](M m) { return thickness_mgf(lqg_from(m), get(m, "lambda")); }},
        {"kw-conjectured-mgf", {"lqg", "lambda"}, "kw-flip",
         [](M m) { return kw_conjectured_mgf(lqg_from(m), get(m, "lambda")); }},
        {"loop-mass-ratio", {"lqg", "alpha"}, "loop-mass-ratio", [](M m) { return loop_mass_ratio(alpha_from(m)); }},
        {"normalized-loop-mass-ratio", {"lqg", "lambda"}, "loop-mass-ratio",
         [](M m) { return normalized_loop_mass_ratio(alpha_for_lambda(lqg_from(m), get(m, "lambda"))); }},
        {"reflection-coefficient", {"lqg", "alpha"}, "reflection-coefficient",
         [](M m) { return reflection_coefficient(alpha_from(m)); }},
        {"sphere-area-density", {"lqg", "alpha", "a"}, "sphere-area-law",
         [](M m) { return sphere_area_density(alpha_from(m), get(m, "a")); }},
        {"disk-length-constant", {"lqg"}, "disk-length-law", [](M m) { return disk_length_constant(lqg_from(m)); }},
        {"u-bar", {"lqg", "alpha"}, "disk-length-law", [](M m) { return u_bar(alpha_from(m)); }},
        {"disk-length-mass", {"lqg", "alpha", "ell"}, "disk-length-law",
         [](M m) { return disk_length_mass(alpha_from(m), get(m, "ell")); }},
        {"fzz-area-density", {"lqg", "alpha", "x"}, "fzz-area-law",
         [](M m) { return fzz_area_density(alpha_from(m), get(m, "x")); }},
        {"fzz-laplace", {"lqg", "alpha", "ell", "mu"}, "fzz-area-law",
         [](M m) { return fzz_laplace(alpha_from(m), get(m, "ell"), get(m, "mu")); }},
        {"gqd-laplace", {"lqg", "ell", "mu"}, "gqd-area-law",
         [](M m) { return gqd_laplace(lqg_from(m), get(m, "ell"), get(m, "mu")); }},
        {"gqd-area-weighted-laplace", {"lqg", "ell", "mu"}, "gqd-area-law",
         [](M m) { return gqd_area_weighted_laplace(lqg_from(m), get(m, "ell"), get(m, "mu")); }},
        {"gqd-mean-area", {"lqg", "ell"}, "gqd-area-law", [](M m) { return gqd_mean_area(lqg_from(m), get(m, "ell")); }},
        {"gqd-length-density", {"lqg", "ell"}, "gqd-length-law",
         [](M m) { return gqd_length_density(lqg_from(m), get(m, "ell")); }},
        {"gqd1-length-density", {"lqg", "ell"}, "gqd-length-law",
         [](M m) { return gqd1_length_density(lqg_from(m), get(m, "ell")); }},
        {"gqd-tail-coefficient", {"lqg"}, "gqd-tail", [](M m) { return gqd_tail_coefficient(lqg_from(m)).coefficient; }},
        {"gqd-tail-exponent", {"lqg"}, "gqd-tail", [](M m) { return gqd_tail_coefficient(lqg_from(m)).exponent; }},
        {"gqd-area-tail-probability", {"lqg", "order", "x"}, "gqd-tail",
         [](M m) { return gqd_area_tail_probability(lqg_from(m), get(m, "order"), get(m, "x")); }},
        {"fd-alpha-tail-coefficient", {"lqg", "alpha"}, "gqd-tail",
         [](M m) { return fd_alpha_tail_coefficient(alpha_from(m)).coefficient; }},
        {"annulus-mass", {"lqg", "a", "b"}, "annulus-mass",
         [](M m) { return annulus_mass(get(m, "a"), get(m, "b"), lqg_from(m)); }},
        {"frak-c", {"beta"}, "annulus-mass", [](M m) { return frak_c(get(m, "beta")); }},
        {"levy-jump-density", {"beta", "a", "b"}, "jump-law",
         [](M m) { return levy_jump_density(get(m, "beta"), get(m, "a"), get(m, "b")); }},
        {"inverse-mean-target", {"beta"}, "inverse-passage-mean", [](M m) { return inverse_mean_target(get(m, "beta")); }},
        {"dilation", {"lqg"}, "dilation", [](M m) { return dilation_constant(lqg_from(m)); }},
        {"cr-moment", {"lqg", "lambda"}, "cr-moment", [](M m) { return ssw_cr_moment(lqg_from(m), get(m, "lambda")); }},
        {"cr-threshold", {"lqg"}, "cr-moment", [](M m) { return ssw_cr_threshold(lqg_from(m)); }},
        {"nu-theta-density", {"theta", "x"}, "cascade", [](M m) { return nu_theta_density(get(m, "theta"), get(m, "x")); }},
        {"psi-theta", {"theta", "lambda"}, "cascade", [](M m) { return psi_theta(get(m, "theta"), get(m, "lambda")); }},
        {"welding-mass-integral", {"lqg", "alpha", "eps", "delta"}, "welding-mass",
         [](M m) { return welding_mass_integral(alpha_from(m), get(m, "eps"), get(m, "delta")); }},
        {"welding-mass-asymptotic", {"lqg", "alpha", "eps"}, "welding-mass",
         [](M m) { return welding_mass_asymptotic(alpha_from(m), get(m, "eps")); }},
        {"jump-moment", {"lqg", "alpha"}, "jump-moment", [](M m) { return detail::constant(ConstantId::jump_moment, m); }},
        {"D-alpha", {"lqg", "alpha"}, "welding-constants", [](M m) { return detail::constant(ConstantId::D_alpha, m); }},
        {"Delta-alpha", {"lqg", "alpha"}, "welding-constants",
         [](M m) { return detail::constant(ConstantId::Delta_alpha, m); }},
        {"M-prime", {"lqg", "mu"}, "gqd-area-law", [](M m) { return detail::constant(ConstantId::M_prime, m); }},
        {"C-gamma", {"lqg"}, "welding-constants", [](M m) { return detail::constant(ConstantId::C_gamma, m); }},
        {"Ktilde-gamma", {"lqg"}, "welding-constants", [](M m) { return detail::constant(ConstantId::Ktilde_gamma, m); }},
        {"K-gamma", {"lqg"}, "welding-constants", [](M m) { return detail::constant(ConstantId::K_gamma, m); }},
        {"Cprime-over-Rprime2", {"lqg"}, "welding-constants",
         [](M m) { return detail::constant(ConstantId::Cprime_over_Rprime2, m); }},
        {"Kprime-over-Rprime2", {"lqg"}, "welding-constants",
         [](M m) { return detail::constant(ConstantId::Kprime_over_Rprime2, m); }},
        {"lower-incomplete-gamma", {"a", "y"}, "special-functions",
         [](M m) { return lower_incomplete_gamma(get(m, "a"), get(m, "y")); }},
        {"gamma", {"x"}, "special-functions", [](M m) { return gamma_fn(get(m, "x")); }},
        {"riemann-zeta", {"s"}, "special-functions", [](M m) { return riemann_zeta(get(m, "s")); }},
        {"bessel-k", {"nu", "x"}, "special-functions", [](M m) { return bessel_k(get(m, "nu"), get(m, "x")); }},
        {"bessel-k-bar", {"nu", "x"}, "special-functions", [](M m) { return bessel_k_bar(get(m, "nu"), get(m, "x")); }},
    };
    return list;
}

inline const FormulaEntry* find_formula(const std::string& name) {
    const auto& r = formula_registry();
    const auto it = std::find_if(r.begin(), r.end(), [&](const FormulaEntry& e) { return e.name == name; });
    return it == r.end() ? nullptr : &*it;
}

}  // namespace looplaw
