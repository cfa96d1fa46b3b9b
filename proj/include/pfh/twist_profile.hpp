// Model twist profile of the annulus region: the function R(t), its slope,
// the slope <-> annulus-position correspondence and the h-parameter used by
// the orbit parametrizations. Everything else reads geometry through this.
#pragma once

#include <stdexcept>

namespace pfh {

// Global model parameters. fiber_genus is g(F), degree_bound is Q,
// fiber_area is the integral of the admissible 2-form over a fiber,
// lambda is the half-width of the twist annulus.
struct TwistProfile {
    int fiber_genus = 2;
    int degree_bound = 1;
    double fiber_area = 4.0;
    double lambda = 10.0;

    // Throws std::domain_error if any model assumption is violated:
    // g(F) >= 2, fiber_area > Q, Q >= 1, Q != g(F)-1, lambda > 0.
    void validate() const;
};

// R(t) = t/2 - (1/4) sqrt(r^2 + 4 t^2). The model fixes r = 1; the radial
// parameter is exposed for the pullback check, which needs general r.
// For r = 1 and t >= 0 the value lies in (-1/4, 0].
double r_tilde(double t, double r = 1.0);

// R'(t) = 1/2 - t / sqrt(1 + 4 t^2), strictly decreasing from 1/2 toward 0.
// Requires t >= 0.
double slope_at(double t);

// Inverse of the slope function, extended to the signed annulus coordinate:
// for s <= 1/2 returns x0 = (1-2s) / (4 sqrt(s(1-s))) >= 0 with
// slope_at(x0) = s; for s > 1/2 returns -position_of_slope(1-s).
// Requires 0 < s < 1.
double position_of_slope(double s);

// The h-parameter of an orbit at annulus coordinate x0, defined by
// cosh^2(h) = sqrt(x0^2 + 1/4) + 1/2, equivalently |x0| = sinh(2h)/2.
// Even in x0, zero exactly at x0 = 0.
double h_of_position(double x0);

}  // namespace pfh
