#ifndef BNV_GAMMA_HPP
#define BNV_GAMMA_HPP

#include <cmath>

#include "bnv/types.hpp"

namespace bnv {

/// log|Gamma(x)| together with the sign of Gamma(x).
struct LogGamma {
    double log_abs;
    int sign;
};

namespace detail {

// Godfrey's 15-term Lanczos coefficients for g = 607/128, good to a few
// ulps in double over the positive real axis.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr double lanczos_c[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// log Gamma(x) for x > 0.
inline double log_gamma_positive(double x) {
    // One shift keeps full accuracy near the pole at 0.
    double shift = 0.0;
    if (x < 0.5) {
        shift = -std::log(x);
        x += 1.0;
    }
    double sum = lanczos_c[0];
    for (int k = 1; k < 15; ++k) sum += lanczos_c[k] / (x + k - 1);
    const double t = x + lanczos_g - 0.5;
    return 0.5 * std::log(2.0 * pi) + (x - 0.5) * std::log(t) - t +
           std::log(sum) + shift;
}

}  // namespace detail

/// log|Gamma(x)| with the sign of Gamma(x). Relative error below 1e-13 on
/// (0, 50]; negative non-integer x handled through the reflection formula
/// Gamma(x) Gamma(1-x) = pi / sin(pi x).
inline LogGamma log_gamma(double x) {
    if (detail::is_nonpositive_integer(x))
        throw domain_error("log_gamma: pole at non-positive integer " +
                           std::to_string(x));
    if (x > 0.0) return {detail::log_gamma_positive(x), 1};
    const double s = std::sin(pi * x);
    const double log_abs =
        std::log(pi / std::fabs(s)) - detail::log_gamma_positive(1.0 - x);
    return {log_abs, s > 0.0 ? 1 : -1};
}

/// Gamma(x) for non-pole real x.
inline double gamma(double x) {
    const LogGamma lg = log_gamma(x);
    return lg.sign * std::exp(lg.log_abs);
}

/// 1/Gamma(x); zero at the poles x = 0, -1, -2, ...
inline double gamma_reciprocal(double x) {
    if (detail::is_nonpositive_integer(x)) return 0.0;
    const LogGamma lg = log_gamma(x);
    return lg.sign * std::exp(-lg.log_abs);
}

}  // namespace bnv

#endif
