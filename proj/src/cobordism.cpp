#include "pfh/cobordism.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfh/ech_index.hpp"

namespace pfh {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::HighDegree: return "high-degree";
        case Regime::LowDegree: return "low-degree";
        case Regime::Intermediate: return "intermediate";
        case Regime::Excluded: return "excluded";
    }
    throw std::logic_error("to_string(Regime): bad value");
}

Regime regime(int degree_bound, int fiber_genus) {
    if (degree_bound < 0 || fiber_genus < 2)
        throw std::domain_error("regime: requires Q >= 0 and g >= 2");
    if (degree_bound == fiber_genus - 1) return Regime::Excluded;
    if (degree_bound > fiber_genus - 1) return Regime::HighDegree;
    if (2 * degree_bound < fiber_genus - 1) return Regime::LowDegree;
    return Regime::Intermediate;
}

namespace {

// Membership in the closed-form index-zero family: products of the boundary
// elliptic orbits e0/e1 and positive-Hessian critical orbits.
bool in_index_zero_family(const OrbitSet& alpha) {
    for (const auto& [kind, mult] : alpha.entries()) {
        bool boundary_elliptic = kind.tag == OrbitTag::SlopeElliptic &&
                                 (kind.p == 0 || kind.p == kind.q);
        if (!boundary_elliptic && kind.tag != OrbitTag::MorsePositive)
            return false;
    }
    return true;
}

bool boundary_elliptic_only(const OrbitSet& alpha) {
    for (const auto& [kind, mult] : alpha.entries())
        if (kind.tag != OrbitTag::SlopeElliptic || (kind.p != 0 && kind.p != kind.q))
            return false;
    return true;
}

// All degree-Q multisets over the index-zero roster, as canonical orbit sets.
std::vector<OrbitSet> closed_form_family(int Q, const MorseConfig& morse) {
    std::vector<OrbitKind> items = {OrbitKind::slope_elliptic(1, 1),
                                    OrbitKind::slope_elliptic(0, 1)};
    for (const auto& kind : morse.roster())
        if (kind.tag == OrbitTag::MorsePositive) items.push_back(kind);

    std::vector<OrbitSet> out;
    std::vector<std::pair<OrbitKind, int>> current;
    auto recurse = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == items.size()) {
            auto with_last = current;
            if (remaining > 0) with_last.emplace_back(items[idx], remaining);
            out.emplace_back(std::move(with_last));
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            if (m > 0) current.emplace_back(items[idx], m);
            self(self, idx + 1, remaining - m);
            if (m > 0) current.pop_back();
        }
    };
    recurse(recurse, 0, Q);
    std::sort(out.begin(), out.end());
    return out;
}

void require_degree(const OrbitSet& alpha, const TwistProfile& profile) {
    if (alpha.degree() != profile.degree_bound)
        throw std::invalid_argument("cobordism map: orbit set degree must equal "
                                    "the profile degree bound");
    if (!alpha.is_ech_generator())
        throw std::invalid_argument("cobordism map: not an ECH generator");
}

}  // namespace

std::vector<OrbitSet> index_zero_generators(const TwistProfile& profile,
                                            const MorseConfig& morse) {
    if (regime(profile.degree_bound, profile.fiber_genus) != Regime::HighDegree)
        throw std::domain_error(
            "index_zero_generators: defined in the high-degree regime only");
    std::vector<OrbitSet> filtered;
    for (const auto& alpha : enumerate_generators(profile.degree_bound, morse))
        if (ech_index_sum(alpha) == 0) filtered.push_back(alpha);
    std::sort(filtered.begin(), filtered.end());
    if (filtered != closed_form_family(profile.degree_bound, morse))
        throw std::logic_error("index_zero_generators: enumeration filter and "
                               "closed-form family disagree");
    return filtered;
}

int chain_map_value(const OrbitSet& alpha, const TwistProfile& profile,
                    const MorseConfig& morse) {
    if (regime(profile.degree_bound, profile.fiber_genus) != Regime::HighDegree)
        throw std::domain_error(
            "chain_map_value: defined in the high-degree regime only");
    (void)morse;
    require_degree(alpha, profile);
    return in_index_zero_family(alpha) ? 1 : 0;
}

HomologyMapOutcome homology_map_value(const OrbitSet& alpha,
                                      const TwistProfile& profile,
                                      const MorseConfig& morse) {
    Regime r = regime(profile.degree_bound, profile.fiber_genus);
    if (r == Regime::HighDegree || r == Regime::Excluded)
        throw std::domain_error("homology_map_value: defined in the low-degree "
                                "and intermediate regimes only");
    (void)morse;
    require_degree(alpha, profile);
    if (r == Regime::Intermediate) return HomologyMapOutcome::NotComputed;
    return boundary_elliptic_only(alpha) ? HomologyMapOutcome::One
                                         : HomologyMapOutcome::Zero;
}

Report low_degree_index_audit(const TwistProfile& profile,
                              const MorseConfig& morse, int fiber_mult_cap) {
    if (regime(profile.degree_bound, profile.fiber_genus) != Regime::LowDegree)
        throw std::domain_error(
            "low_degree_index_audit: low-degree regime required");
    const int Q = profile.degree_bound;
    auto generators = enumerate_generators(Q, morse);
    long bound_violations = 0, indicator_mismatches = 0, zero_count = 0;
    for (const auto& alpha : generators) {
        for (int m = 0; m <= fiber_mult_cap; ++m)
            if (ech_index_shifted(alpha, m, profile) >= 2 * Q - 2 * m * Q)
                ++bound_violations;
        bool is_zero = ech_index_sum(alpha) == 0;
        if (is_zero) ++zero_count;
        if (is_zero != in_index_zero_family(alpha)) ++indicator_mismatches;
    }
    Report r;
    r.title = "low-degree index audit Q=" + std::to_string(Q) +
              " g=" + std::to_string(profile.fiber_genus);
    std::string counters = std::to_string(generators.size()) + " generators, " +
                           std::to_string(zero_count) + " of index zero";
    if (morse.n_positive > 0)
        counters += "; warning: positive-Hessian critical points present, "
                    "outside the theorem's low-degree hypothesis";
    r.add_flag("shifted index bound I_m < 2Q - 2mQ", bound_violations == 0,
               counters);
    r.add_flag("index-zero set matches the closed-form family",
               indicator_mismatches == 0,
               std::to_string(indicator_mismatches) + " mismatches");
    return r;
}

}  // namespace pfh
