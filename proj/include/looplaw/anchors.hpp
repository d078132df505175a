#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace looplaw {

struct Anchor {
    std::string_view label;
    std::string_view topic;
};

/// Every anchor string the library and CLI may attach to an output row.
inline const std::vector<Anchor>& anchor_registry() {
    static const std::vector<Anchor> list = {
        {"thickness-mgf", "exponential moments of the electrical thickness"},
        {"kw-flip", "conjectured thickness moments under kappa -> 16/kappa"},
        {"loop-mass-ratio", "normalized loop mass ratio in alpha"},
        {"reflection-coefficient", "unit-volume reflection coefficient"},
        {"sphere-area-law", "area law of the one-point sphere"},
        {"disk-length-law", "boundary length laws of the disk"},
        {"fzz-area-law", "inverse gamma area law and its Bessel transform"},
        {"gqd-area-law", "area transforms of the generalized disk"},
        {"gqd-length-law", "boundary length laws of the generalized disk"},
        {"gqd-tail", "area tail of the generalized disk"},
        {"annulus-mass", "annulus mass in the two boundary lengths"},
        {"jump-law", "size-biased law of the first-passage jumps"},
        {"hitting-ratio", "ratio of first-passage times"},
        {"inverse-passage-mean", "mean inverse first-passage time"},
        {"levy-sim", "stable first-passage path simulation"},
        {"cascade", "outermost loop lengths and the cascade kernel"},
        {"looptree", "looptree built from a discrete excursion"},
        {"jump-moment", "moment of the scaled excursion jumps"},
        {"dilation", "dilation constant"},
        {"cr-moment", "conformal radius moments"},
        {"renewal", "renewal count of separating loops"},
        {"welding-constants", "determined welding constants"},
        {"welding-mass", "small-length welding mass"},
        {"special-functions", "gamma, zeta and Bessel helpers"},
    };
    return list;
}

inline bool is_registered_anchor(std::string_view label) {
    const auto& r = anchor_registry();
    return std::any_of(r.begin(), r.end(), [&](const Anchor& a) { return a.label == label; });
}

}  // namespace looplaw
