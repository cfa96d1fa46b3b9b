#include "pfh/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace pfh {

double orbit_energy(const OrbitKind& kind) {
    if (!kind.is_slope()) return 0.0;
    if (kind.p == 0 || kind.p == kind.q) return 0.0;  // boundary orbits
    double slope = static_cast<double>(kind.p) / kind.q;
    double x0 = std::fabs(position_of_slope(slope));
    return kind.q * (x0 * slope_at(x0) - r_tilde(x0));
}

double orbitset_energy(const OrbitSet& alpha, int fiber_mult,
                       const TwistProfile& profile) {
    double total = fiber_mult * profile.fiber_area;
    for (const auto& [kind, mult] : alpha.entries())
        total += mult * orbit_energy(kind);
    return total;
}

Admissibility is_admissible_class(const OrbitSet& alpha, int fiber_mult,
                                  const TwistProfile& profile) {
    if (!(profile.fiber_area > profile.degree_bound))
        throw std::domain_error(
            "is_admissible_class: requires fiber_area > degree bound");
    if (alpha.degree() > profile.degree_bound)
        throw std::domain_error(
            "is_admissible_class: orbit set exceeds the degree bound");
    if (orbitset_energy(alpha, fiber_mult, profile) < 0.0)
        return {false, "negative energy"};
    return {true, {}};
}

}  // namespace pfh
