#include "pfh/twist_profile.hpp"

#include <cmath>

namespace pfh {

void TwistProfile::validate() const {
    if (fiber_genus < 2)
        throw std::domain_error("twist profile: fiber genus must be >= 2");
    if (degree_bound < 1)
        throw std::domain_error("twist profile: degree bound must be >= 1");
    if (!(fiber_area > static_cast<double>(degree_bound)))
        throw std::domain_error("twist profile: fiber area must exceed the degree bound");
    if (degree_bound == fiber_genus - 1)
        throw std::domain_error("twist profile: degree bound g(F)-1 is excluded");
    if (!(lambda > 0.0))
        throw std::domain_error("twist profile: lambda must be positive");
}

double r_tilde(double t, double r) {
    if (t < 0.0) throw std::domain_error("r_tilde: t must be nonnegative");
    return t / 2.0 - 0.25 * std::sqrt(r * r + 4.0 * t * t);
}

double slope_at(double t) {
    if (t < 0.0) throw std::domain_error("slope_at: t must be nonnegative");
    return 0.5 - t / std::sqrt(1.0 + 4.0 * t * t);
}

double position_of_slope(double s) {
    if (!(s > 0.0 && s < 1.0))
        throw std::domain_error("position_of_slope: slope must lie in (0,1)");
    if (s > 0.5) return -position_of_slope(1.0 - s);
    return (1.0 - 2.0 * s) / (4.0 * std::sqrt(s * (1.0 - s)));
}

double h_of_position(double x0) {
    // |x0| = sinh(2h)/2, so h = asinh(2|x0|)/2.
    return 0.5 * std::asinh(2.0 * std::fabs(x0));
}

}  // namespace pfh
