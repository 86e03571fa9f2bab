#ifndef BNV_HYP2F1_HPP
#define BNV_HYP2F1_HPP

#include <cmath>
#include <limits>

#include "bnv/gamma.hpp"
#include "bnv/types.hpp"

namespace bnv {

/// Partial sum of a hypergeometric series plus a certified bound on the
/// absolute truncation error.
struct SeriesResult {
    double value;
    double truncation_bound;
};

namespace detail {

inline constexpr int hyp2f1_max_terms = 100000;

// Sums sum_{k>=k0} t_k with t_{k0} = c0 and the 2F1 term recurrence
// t_{k+1} = t_k (delta+k)(beta+k) z / ((gamma+k)(k+1)).
//
// The tail past index m is bounded geometrically: for j >= m
//   |t_{j+1}/t_j| <= z (1+|delta|/j)(1+|beta|/j)/(1-|gamma|/j) =: z Rbar(j),
// and Rbar decreases in j, so |sum_{j>=m} t_j| <= |t_m| / (1 - z Rbar(m))
// once z Rbar(m) < 1. A rounding allowance of a few eps times the sum of
// absolute terms is folded into the reported bound.
inline SeriesResult hyp2f1_sum(double delta, double beta, double gamma_,
                               double z, double c0, int k0, double tol) {
    const double abs_d = std::fabs(delta), abs_b = std::fabs(beta),
                 abs_g = std::fabs(gamma_);
    double term = c0;
    double sum = 0.0;
    double abs_sum = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int k = k0; k < hyp2f1_max_terms; ++k) {
        sum += term;
        abs_sum += std::fabs(term);
        term *= (delta + k) * (beta + k) * z / ((gamma_ + k) * (k + 1));
        const double slack = 8.0 * eps * abs_sum;
        if (term == 0.0) return {sum, slack};
        const double m = k + 1.0;
        if (m > abs_g + 1.0) {
            const double rbar =
                z * (1.0 + abs_d / m) * (1.0 + abs_b / m) / (1.0 - abs_g / m);
            if (rbar < 1.0) {
                const double bound = std::fabs(term) / (1.0 - rbar) + slack;
                if (bound <= tol) return {sum, bound};
            }
        }
    }
    throw convergence_error("hyp2f1: series did not meet tolerance within " +
                            std::to_string(hyp2f1_max_terms) + " terms");
}

}  // namespace detail

/// Gauss hypergeometric series 2F1(delta, beta; gamma; z) for z in [0, 1/2],
/// summed until the certified geometric tail bound drops below tol.
inline SeriesResult hyp2f1(double delta, double beta, double gamma_, double z,
                           double tol = 1e-13) {
    if (detail::is_nonpositive_integer(gamma_))
        throw domain_error("hyp2f1: gamma is a non-positive integer");
    if (!(z >= 0.0 && z <= 0.5))
        throw domain_error("hyp2f1: z must lie in [0, 1/2], got " +
                           std::to_string(z));
    return detail::hyp2f1_sum(delta, beta, gamma_, z, 1.0, 0, tol);
}

/// Regularized series 2F1(delta, beta; gamma; z)/Gamma(gamma), entire in
/// gamma; at gamma = -m the first m+1 terms vanish.
inline SeriesResult hyp2f1_regularized(double delta, double beta,
                                       double gamma_, double z,
                                       double tol = 1e-13) {
    if (!(z >= 0.0 && z <= 0.5))
        throw domain_error("hyp2f1_regularized: z must lie in [0, 1/2], got " +
                           std::to_string(z));
    if (!detail::is_nonpositive_integer(gamma_))
        return detail::hyp2f1_sum(delta, beta, gamma_, z, gamma_reciprocal(gamma_),
                                  0, tol);
    // gamma = -m: start at k = m+1 where Gamma(gamma+k) = Gamma(1) = 1.
    const int m = static_cast<int>(-gamma_);
    double c0 = 1.0;
    for (int j = 0; j <= m; ++j) c0 *= (delta + j) * (beta + j) * z / (j + 1);
    return detail::hyp2f1_sum(delta, beta, gamma_, z, c0, m + 1, tol);
}

}  // namespace bnv

#endif
