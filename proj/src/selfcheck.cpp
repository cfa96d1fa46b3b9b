#include "pfh/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "pfh/cobordism.hpp"
#include "pfh/ech_index.hpp"
#include "pfh/energy.hpp"
#include "pfh/homology.hpp"
#include "pfh/lattice.hpp"
#include "pfh/orbit.hpp"
#include "pfh/orbit_geometry.hpp"
#include "pfh/twist_profile.hpp"

namespace pfh {

namespace {

TwistProfile profile_for(int Q, int g) {
    TwistProfile p;
    p.degree_bound = Q;
    p.fiber_genus = g;
    p.fiber_area = 4.0 * Q;
    return p;
}

// A genus clear of both the excluded line Q = g-1 and the intermediate band.
int high_genus_for(int Q) { return std::max(2, 2 * Q + 2); }

void check_triple_agreement(Report& r, int max_degree) {
    long count = 0, disagreements = 0;
    for (int Q = 1; Q <= max_degree; ++Q) {
        TwistProfile profile = profile_for(Q, high_genus_for(Q));
        for (const auto& morse :
             {MorseConfig{}, MorseConfig{2, 2, 2}}) {
            for (const auto& alpha : enumerate_generators(Q, morse)) {
                ++count;
                int a = ech_index_sum(alpha);
                int b = ech_index_area(alpha);
                int c = ech_index_components(alpha, profile);
                if (a != b || b != c) ++disagreements;
            }
        }
    }
    r.add_flag("index: three formulas agree", disagreements == 0,
               std::to_string(count) + " generators");
}

void check_index_zero_set(Report& r, int max_degree) {
    long failures = 0;
    for (int Q = 1; Q <= max_degree; ++Q) {
        long zero = 0;
        for (const auto& alpha : enumerate_generators(Q)) {
            int idx = ech_index_sum(alpha);
            if (idx < 0) ++failures;
            if (idx == 0) {
                ++zero;
                for (const auto& [kind, mult] : alpha.entries())
                    if (kind.tag != OrbitTag::SlopeElliptic ||
                        (kind.p != 0 && kind.p != kind.q))
                        ++failures;
            }
        }
        if (zero != Q + 1) ++failures;
    }
    r.add_flag("index: nonnegative with the expected zero set", failures == 0);
}

void check_qtau_oracle(Report& r, int max_q) {
    long pairs = 0, failures = 0;
    for (int q = 1; q <= max_q; ++q)
        for (int p = 0; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (int q2 = 1; q2 <= max_q; ++q2)
                for (int p2 = 0; p2 <= q2; ++p2) {
                    if (std::gcd(p2, q2) != 1) continue;
                    if (static_cast<long>(p) * q2 < static_cast<long>(p2) * q)
                        continue;
                    ++pairs;
                    try {
                        long expect = (p == p2 && q == q2)
                                          ? static_cast<long>(p) * (q - p)
                                          : q_tau_pair(p, q, p2, q2);
                        if (q_tau_oracle(p, q, p2, q2) != expect) ++failures;
                    } catch (const std::exception&) {
                        ++failures;
                    }
                }
        }
    r.add_flag("lattice: torus root-count oracle", failures == 0,
               std::to_string(pairs) + " ordered pairs");
}

void check_mixed_volume_closed_form(Report& r) {
    long failures = 0;
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= 10; ++b)
            for (int c = 1; c <= 10; ++c)
                for (int d = 1; d <= 10; ++d) {
                    auto t1 = LatticePolygon::hull({{0, 0}, {a, 0}, {0, b}});
                    auto t2 = LatticePolygon::hull({{0, 0}, {c, 0}, {0, d}});
                    if (mixed_volume(t1, t2) !=
                        std::max(static_cast<long long>(a) * d,
                                 static_cast<long long>(b) * c))
                        ++failures;
                }
    r.add_flag("lattice: leg-triangle mixed volume closed form", failures == 0);
}

void check_orbit_geometry(Report& r, int max_q) {
    double worst = 0.0;
    bool ok = true;
    for (int q = 2; q <= max_q; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (double y0 : {0.0, 0.3, 0.7}) {
                Report one = verify_orbit(p, q, y0, 256 * q, 1e-9);
                ok = ok && one.all_pass();
                for (const auto& c : one.checks)
                    worst = std::max(worst, c.max_error);
            }
        }
    r.add("geometry: orbit round trips", worst, 1e-9);
    Report pb = verify_oneform_pullback({}, 1e-6);
    r.add_flag("geometry: primitive 1-form pullback", pb.all_pass());
}

void check_energy(Report& r, int max_degree) {
    long failures = 0;
    if (std::fabs(orbit_energy(OrbitKind::slope_elliptic(1, 2)) - 0.5) > 1e-12)
        ++failures;
    if (std::fabs(orbit_energy(OrbitKind::slope_elliptic(1, 4)) -
                  std::sqrt(3.0) / 2.0) > 1e-12)
        ++failures;
    for (int Q = 1; Q <= max_degree; ++Q) {
        TwistProfile profile = profile_for(Q, high_genus_for(Q));
        for (const auto& alpha : enumerate_generators(Q)) {
            double e = orbitset_energy(alpha, 0, profile);
            if (!(e <= Q + 1e-12)) ++failures;
            if (is_admissible_class(alpha, -1, profile).admissible) ++failures;
            if (!is_admissible_class(alpha, 0, profile).admissible) ++failures;
        }
    }
    for (int q = 2; q <= 64; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            double e = orbit_energy(OrbitKind::slope_elliptic(p, q));
            if (!(e > 0.0) || !(e / q <= 0.25 + 1e-12)) ++failures;
        }
    r.add_flag("energy: values, bounds and admissibility", failures == 0);
}

void check_homology(Report& r, int max_genus) {
    long failures = 0;
    for (int g = 1; g <= max_genus; ++g) {
        AbelianGroup h1 = h1_mapping_torus(g);
        if (h1.free_rank != 2 * g || !h1.torsion.empty()) ++failures;
        for (bool dual : {false, true}) {
            auto m = IntegerMatrix::identity(2 * g) - dehn_twist_action(g, dual);
            AbelianGroup ck = cokernel(m);
            if (ck.free_rank != 2 * g - 1 || !ck.torsion.empty()) ++failures;
        }
    }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 3, k = 2 + rng() % 3;
        IntegerMatrix m(n, k);
        for (auto& e : m.entries) e = static_cast<int>(rng() % 21) - 10;
        SmithResult s = smith_normal_form(m);
        if (s.u * m * s.v != s.d) ++failures;
        if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) ++failures;
        for (std::size_t i = 1; i < s.factors.size(); ++i)
            if (s.factors[i] % s.factors[i - 1] != 0) ++failures;
    }
    r.add_flag("homology: mapping-torus ranks and normal-form identities",
               failures == 0);
}

void check_cobordism(Report& r) {
    long failures = 0;
    for (auto [Q, g] : {std::pair{3, 2}, {5, 3}, {6, 4}}) {
        TwistProfile profile = profile_for(Q, g);
        for (int npos : {0, 1}) {
            MorseConfig morse{npos, 0, 0};
            auto zero_sets = index_zero_generators(profile, morse);
            long ones = 0;
            for (const auto& alpha : enumerate_generators(Q, morse)) {
                int v = chain_map_value(alpha, profile, morse);
                bool in_family = std::binary_search(zero_sets.begin(),
                                                    zero_sets.end(), alpha);
                if (v != (in_family ? 1 : 0)) ++failures;
                ones += v;
            }
            if (ones != static_cast<long>(zero_sets.size())) ++failures;
        }
    }
    for (auto [Q, g] : {std::pair{1, 4}, {2, 8}, {3, 9}}) {
        TwistProfile profile = profile_for(Q, g);
        if (!low_degree_index_audit(profile).all_pass()) ++failures;
        for (const auto& alpha : enumerate_generators(Q)) {
            bool boundary_only = true;
            for (const auto& [kind, mult] : alpha.entries())
                if (kind.tag != OrbitTag::SlopeElliptic ||
                    (kind.p != 0 && kind.p != kind.q))
                    boundary_only = false;
            auto v = homology_map_value(alpha, profile);
            if (v != (boundary_only ? HomologyMapOutcome::One
                                    : HomologyMapOutcome::Zero))
                ++failures;
        }
    }
    r.add_flag("cobordism: chain and homology values match the index", failures == 0);
}

void check_plane_classification(Report& r) {
    long failures = 0;
    for (auto [Q, g] : {std::pair{3, 6}, {2, 10}}) {
        TwistProfile profile = profile_for(Q, g);
        auto found = classify_index_zero_curves(profile);
        CurveData special{};
        special.q_negative_mult = 1;
        special.degree = 1;
        if (found.size() != 1 || !(found[0] == special)) ++failures;
    }
    r.add_flag("curves: unique rigid plane solution", failures == 0);
}

void check_shift_linearity(Report& r) {
    std::mt19937 rng(11);
    long failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int Q = 1 + rng() % 6;
        int g = 2 + rng() % 8;
        TwistProfile profile = profile_for(Q, g == Q + 1 ? g + 1 : g);
        auto gens = enumerate_generators(Q);
        const auto& alpha = gens[rng() % gens.size()];
        int m = rng() % 5;
        int diff = ech_index_shifted(alpha, m + 1, profile) -
                   ech_index_shifted(alpha, m, profile);
        if (diff != 2 * (Q + 1 - profile.fiber_genus)) ++failures;
    }
    r.add_flag("index: fiber-shift linearity", failures == 0);
}

}  // namespace

Report run_all(const SelfCheckRanges& ranges) {
    Report r;
    r.title = "self-check suite";
    check_triple_agreement(r, ranges.max_degree);
    check_index_zero_set(r, ranges.max_degree);
    check_qtau_oracle(r, ranges.max_q);
    check_mixed_volume_closed_form(r);
    check_orbit_geometry(r, ranges.geometry_max_q);
    check_energy(r, ranges.max_degree);
    check_homology(r, ranges.max_genus);
    check_cobordism(r);
    check_plane_classification(r);
    check_shift_linearity(r);
    return r;
}

}  // namespace pfh
