#include "pfh/ech_index.hpp"

#include <stdexcept>

namespace pfh {

void CurveData::validate() const {
    if (genus < 0 || hyperbolic_ends < 0 || q_positive_ends < 0 ||
        q_negative_mult < 0 || double_points < 0 || degree < 0)
        throw std::domain_error("curve data: counts must be nonnegative");
    if (hyperbolic_ends + q_positive_ends + q_negative_mult > degree)
        throw std::domain_error("curve data: end counts exceed degree budget");
}

int conley_zehnder(const OrbitKind& kind, int iterate, int degree_bound) {
    if (iterate < 1) throw std::domain_error("conley_zehnder: iterate must be >= 1");
    if (kind.is_elliptic() && iterate > degree_bound)
        throw std::domain_error("conley_zehnder: iterate exceeds degree bound");
    switch (kind.tag) {
        case OrbitTag::SlopeElliptic:
        case OrbitTag::MorsePositive: return -1;
        case OrbitTag::MorseNegative: return 1;
        case OrbitTag::SlopeHyperbolic:
        case OrbitTag::MorseSaddle: return 0;
    }
    return 0;
}

int relative_chern(const OrbitSet& alpha) {
    int c = 0;
    for (const auto& [kind, mult] : alpha.entries()) c += mult * kind.degree();
    return c;
}

int q_tau_pair(int p, int q, int p2, int q2) {
    if (static_cast<long long>(p) * q2 < static_cast<long long>(p2) * q)
        throw std::invalid_argument("q_tau_pair: slopes out of order");
    if (p == p2 && q == q2) return p * (q - p);
    return std::min(p * (q2 - p2), p2 * (q - p));
}

int q_tau_pair_sorted(int p, int q, int p2, int q2) {
    if (static_cast<long long>(p) * q2 < static_cast<long long>(p2) * q)
        return q_tau_pair(p2, q2, p, q);
    return q_tau_pair(p, q, p2, q2);
}

namespace {

// Slope entries flattened with multiplicity, slope descending.
std::vector<std::pair<int, int>> flat_slopes(const OrbitSet& alpha) {
    std::vector<std::pair<int, int>> flat;
    for (const auto& [kind, mult] : alpha.entries())
        if (kind.is_slope())
            for (int i = 0; i < mult; ++i) flat.emplace_back(kind.p, kind.q);
    return flat;  // entries() is already in slope-descending order
}

// P(Q-P) - sum_{i<j} (p_i q_j - p_j q_i) over the flat list.
long long q_tau_flat(const std::vector<std::pair<int, int>>& flat) {
    long long P = 0, Q = 0, cross = 0;
    for (const auto& [p, q] : flat) { P += p; Q += q; }
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = i + 1; j < flat.size(); ++j)
            cross += static_cast<long long>(flat[i].first) * flat[j].second -
                     static_cast<long long>(flat[j].first) * flat[i].second;
    return P * (Q - P) - cross;
}

int total_elliptic_slope_mult(const OrbitSet& alpha) {
    int e = 0;
    for (const auto& [kind, mult] : alpha.entries())
        if (kind.tag == OrbitTag::SlopeElliptic) e += mult;
    return e;
}

// 0 / 2m / m for positive-Hessian / negative-Hessian / saddle entries.
int morse_index_contribution(const OrbitSet& alpha) {
    int total = 0;
    for (const auto& [kind, mult] : alpha.entries()) {
        if (kind.tag == OrbitTag::MorseNegative) total += 2 * mult;
        else if (kind.tag == OrbitTag::MorseSaddle) total += mult;
    }
    return total;
}

}  // namespace

int q_tau_total(const OrbitSet& alpha) {
    auto flat = flat_slopes(alpha);
    long long flat_form = q_tau_flat(flat);
    // bilinear expansion over distinct entries
    std::vector<std::pair<OrbitKind, int>> slopes;
    for (const auto& e : alpha.entries())
        if (e.first.is_slope()) slopes.push_back(e);
    long long bilinear = 0;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const auto& [ki, mi] = slopes[i];
        // m copies at one slope: m diagonal terms plus 2*C(m,2) same-slope
        // pairs, all equal to p(q-p), i.e. m^2 p(q-p) in total
        bilinear += static_cast<long long>(mi) * mi * ki.p * (ki.q - ki.p);
        for (std::size_t j = i + 1; j < slopes.size(); ++j) {
            const auto& [kj, mj] = slopes[j];
            bilinear += 2LL * mi * mj * q_tau_pair_sorted(ki.p, ki.q, kj.p, kj.q);
        }
    }
    if (flat_form != bilinear)
        throw std::logic_error("q_tau_total: flat and bilinear forms disagree");
    return static_cast<int>(flat_form);
}

int ech_index_sum(const OrbitSet& alpha) {
    auto flat = flat_slopes(alpha);
    long long Q = 0;
    for (const auto& [p, q] : flat) Q += q;
    long long slope_part = Q + q_tau_flat(flat) - total_elliptic_slope_mult(alpha);
    return static_cast<int>(slope_part + morse_index_contribution(alpha));
}

int ech_index_area(const OrbitSet& alpha) {
    auto flat = flat_slopes(alpha);
    long long P = 0, Q = 0;
    // polygon: (0,0) -> path vertices -> (P,Q) -> (P,0) -> close
    std::vector<std::pair<long long, long long>> verts{{0, 0}};
    for (const auto& [p, q] : flat) {
        P += p;
        Q += q;
        verts.emplace_back(P, Q);
    }
    verts.emplace_back(P, 0);
    long long shoelace = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const auto& [x1, y1] = verts[i];
        const auto& [x2, y2] = verts[(i + 1) % verts.size()];
        shoelace += x1 * y2 - x2 * y1;
    }
    long long area2 = shoelace < 0 ? -shoelace : shoelace;
    long long slope_part = Q + area2 - P * P - total_elliptic_slope_mult(alpha);
    return static_cast<int>(slope_part + morse_index_contribution(alpha));
}

int ech_index_components(const OrbitSet& alpha, const TwistProfile& profile) {
    int total = relative_chern(alpha) + q_tau_total(alpha);
    for (const auto& [kind, mult] : alpha.entries())
        for (int k = 1; k <= mult; ++k)
            total += conley_zehnder(kind, k, profile.degree_bound);
    int reference = ech_index_sum(alpha);
    if (total != reference)
        throw std::logic_error("ech_index_components: disagrees with closed formula");
    return total;
}

int ech_index_shifted(const OrbitSet& alpha, int fiber_mult,
                      const TwistProfile& profile) {
    int Q = alpha.degree();
    return ech_index_sum(alpha) + 2 * fiber_mult * (Q + 1 - profile.fiber_genus);
}

int fredholm_index(const CurveData& c, const TwistProfile& profile) {
    c.validate();
    return 2 * c.genus - 2 + c.hyperbolic_ends + 2 * c.degree +
           4 * c.fiber_mult * (1 - profile.fiber_genus) + 2 * c.q_positive_ends;
}

int self_intersection_doubled(const CurveData& c, const TwistProfile& profile) {
    return 2 * c.genus - 2 + fredholm_index(c, profile) + c.hyperbolic_ends +
           2 * c.q_negative_mult + 4 * c.double_points;
}

std::vector<CurveData> classify_index_zero_curves(const TwistProfile& profile,
                                                  const CurveSearchCaps& caps,
                                                  bool require_index_zero) {
    profile.validate();
    if (profile.degree_bound >= profile.fiber_genus - 1)
        throw std::domain_error(
            "classify_index_zero_curves: requires the low-degree regime Q < g(F)-1");
    std::vector<CurveData> found;
    for (int q = 1; q <= profile.degree_bound; ++q)
        for (int g = 0; g <= caps.max_genus; ++g)
            for (int m = 0; m <= caps.max_fiber_mult; ++m)
                for (int d = 0; d <= caps.max_double_points; ++d)
                    for (int h = 0; h <= q; ++h)
                        for (int ep = 0; ep + h <= q; ++ep)
                            for (int eq = 0; eq + ep + h <= q; ++eq) {
                                CurveData c{g, h, ep, eq, d, q, m};
                                if (require_index_zero &&
                                    fredholm_index(c, profile) != 0)
                                    continue;
                                if (self_intersection_doubled(c, profile) != 0)
                                    continue;
                                found.push_back(c);
                            }
    return found;
}

}  // namespace pfh
