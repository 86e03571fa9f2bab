#ifndef BNV_TYPES_HPP
#define BNV_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace bnv {

inline constexpr double pi = 3.14159265358979323846;

/// Input outside the admissible parameter range.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative scheme failed to reach its tolerance within its budget.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension parameter of the radial problem, treated as a real number in
/// (2,4), together with the derived order alpha = (2-n)/2 in (-1,0) and
/// the critical exponent p = (n+2)/(n-2).
struct Dimension {
    double n;
    double alpha;
    double p;

    explicit Dimension(double n_)
        : n(n_), alpha((2.0 - n_) / 2.0), p((n_ + 2.0) / (n_ - 2.0)) {
        if (!(n_ > 2.0 && n_ < 4.0))
            throw domain_error("Dimension: n must lie in (2,4), got " +
                               std::to_string(n_));
    }
};

/// Geodesic cap of radius theta1, strictly inside a hemisphere, and the
/// radius R = tan(theta1/2) of its stereographic image.
///
/// theta1 is restricted to [0.05, pi/2 - 1e-6]: degrees of the critical
/// Legendre functions scale like pi/theta1 and must stay within the
/// series range.
struct CapGeometry {
    double theta1;
    double R;

    explicit CapGeometry(double t1) : theta1(t1), R(std::tan(t1 / 2.0)) {
        if (!(t1 >= 0.05 && t1 <= pi / 2.0 - 1e-6))
            throw domain_error("CapGeometry: theta1 must lie in [0.05, pi/2), got " +
                               std::to_string(t1));
    }
};

}  // namespace bnv

#endif
