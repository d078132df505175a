#pragma once

#include <stdexcept>
#include <string>

namespace looplaw {

/// Argument outside the admissible set of a formula or sampler.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument sits on a singularity (Gamma pole, sine or cosine zero).
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Quadrature, inversion, or rejection sampling did not converge.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class timeout_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw domain_error(what);
}

}  // namespace detail
}  // namespace looplaw
