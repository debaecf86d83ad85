#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arccoord/gen.hpp"
#include "arccoord/spine.hpp"

using namespace arccoord;

namespace {

MaximalCoordinates symmetric_torus() {
    const double a = 2.0 * std::asinh(1.0);
    return MaximalCoordinates::create(one_holed_torus_ribbon(), {a, a, a});
}

MaximalCoordinates random_surface(Rng& rng, int max_g, int max_n, double lo, double hi) {
    for (;;) {
        const int g = static_cast<int>(rng() % (max_g + 1));
        const int n = 1 + static_cast<int>(rng() % max_n);
        if (2 - 2 * g - n >= 0) continue;
        auto r = random_maximal_ribbon({g, n}, rng);
        auto a = random_lengths(r.n_arcs(), lo, hi, rng);
        return MaximalCoordinates::create(std::move(r), std::move(a));
    }
}

// Pair-of-pants system whose arc 0 bounds the same hexagon on both sides;
// flipping that arc is degenerate.
MaximalCoordinates pants_with_loop_hexagon() {
    // sigma0 = (0 1 2)(3 4 5)
    return MaximalCoordinates::create(
        RibbonStructure::create({0, 3}, 3, {0, 2, 5, 1, 4, 3}, {0, 1, 1, 1, 2, 1}),
        {1.0, 1.2, 0.9});
}

// The flipped arc joins the hexagons (alpha, gamma, delta); its length also
// satisfies the merged-segment relation of the glued octagon, which gives an
// algebraic oracle for the geometric computation.
double flip_length_oracle(const MaximalCoordinates& m, int arc) {
    const auto& r = m.ribbon;
    const int fwd = 2 * arc, bwd = 2 * arc + 1;
    const int B = r.sigma0(fwd), G = r.sigma0(B);
    const int D = r.sigma0(bwd), E = r.sigma0(D);
    const double a = m.a[arc];
    const double b = m.a[arc_of_dart(B)], c = m.a[arc_of_dart(G)];
    const double d = m.a[arc_of_dart(D)], e = m.a[arc_of_dart(E)];
    const auto seg1 = hexagon_segments({a, b, c});
    const auto seg2 = hexagon_segments({a, d, e});
    const double merged = seg1[2] + seg2[0]; // after gamma plus after reversed alpha
    return std::acosh(std::cosh(merged) * std::sinh(c) * std::sinh(d) -
                      std::cosh(c) * std::cosh(d));
}

} // namespace

TEST_CASE("realize_hexagon: symmetric hexagon closes and reproduces its sides") {
    const double a = 2.0 * std::asinh(1.0);
    const auto hex = realize_hexagon({a, a, a});
    CHECK(hex.closure_error <= 1e-10);

    const double seg = hexagon_segments({a, a, a})[0];
    const std::array<double, 6> expected{a, seg, a, seg, a, seg};
    for (int i = 0; i < 6; ++i) {
        // corner distance along side i
        const double len = point_distance(hex.corners[(i + 5) % 6], hex.corners[i]);
        CHECK(len == doctest::Approx(expected[i]).epsilon(1e-9));
        // each side length is the distance between its neighbor geodesics
        const double across =
            geodesic_distance(hex.side_normals[(i + 5) % 6], hex.side_normals[(i + 1) % 6]);
        CHECK(across == doctest::Approx(expected[i]).epsilon(1e-9));
    }
    // consecutive sides meet orthogonally
    for (int i = 0; i < 6; ++i) {
        CHECK(std::fabs(static_cast<double>(
                  minkowski_dot(hex.side_normals[i], hex.side_normals[(i + 1) % 6]))) < 1e-10);
    }
}

TEST_CASE("realize_hexagon: starting side does not matter up to isometry") {
    const HexTriple h{0.8, 1.7, 2.4};
    const auto hex1 = realize_hexagon(h);
    const auto hex2 = realize_hexagon({h.a_j, h.a_k, h.a_i});
    std::array<double, 6> sides1{}, sides2{};
    for (int i = 0; i < 6; ++i) {
        sides1[i] = point_distance(hex1.corners[(i + 5) % 6], hex1.corners[i]);
        sides2[i] = point_distance(hex2.corners[(i + 5) % 6], hex2.corners[i]);
    }
    // sides2 is sides1 rotated by two positions
    for (int i = 0; i < 6; ++i) {
        CHECK(sides2[i] == doctest::Approx(sides1[(i + 2) % 6]).epsilon(1e-9));
    }
}

TEST_CASE("realize_hexagon_sides rejects inconsistent side lengths") {
    const std::array<long double, 6> bogus{1.0L, 1.0L, 1.0L, 1.0L, 1.0L, 1.0L};
    CHECK_THROWS_AS(realize_hexagon_sides(bogus, Frame::base(), 1e-8), NumericalClosureFailure);
}

TEST_CASE("flip preserves the boundary circumferences") {
    Rng rng(31);
    int flips_done = 0;
    while (flips_done < 200) {
        const auto m = random_surface(rng, 3, 4, 0.3, 3.0);
        const int arc = static_cast<int>(rng() % m.ribbon.n_arcs());
        const auto p_before = circumferences(m);
        FlipResult res = [&] {
            try {
                return flip(m, arc);
            } catch (const NonFlippable&) {
                return FlipResult{m, {}};
            }
        }();
        if (res.move.arc < 0) continue;
        const auto p_after = circumferences(res.coords);
        for (size_t k = 0; k < p_before.size(); ++k) {
            CHECK(std::fabs(p_after[k] - p_before[k]) <= 1e-8 * std::max(1.0, p_before[k]));
        }
        CHECK(res.coords.ribbon.is_maximal());
        ++flips_done;
    }
}

TEST_CASE("double flip restores the original lengths") {
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_surface(rng, 2, 3, 0.3, 3.0);
        const int arc = static_cast<int>(rng() % m.ribbon.n_arcs());
        try {
            const auto once = flip(m, arc);
            const auto twice = flip(once.coords, arc);
            for (int i = 0; i < m.ribbon.n_arcs(); ++i) {
                CHECK(std::fabs(twice.coords.a[i] - m.a[i]) <= 1e-8 * std::max(1.0, m.a[i]));
            }
        } catch (const NonFlippable&) {
            continue;
        }
    }
}

TEST_CASE("double flip on a skewed corpus: accurate or loudly refused") {
    // Random flips on wide length ranges can pass through nearly degenerate
    // diagonals; there the frame march detects that double-rounded sides
    // no longer close and refuses instead of returning garbage.
    Rng rng(37);
    int refused = 0, done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_surface(rng, 2, 3, 0.1, 5.0);
        const int arc = static_cast<int>(rng() % m.ribbon.n_arcs());
        try {
            const auto once = flip(m, arc);
            const auto twice = flip(once.coords, arc);
            for (int i = 0; i < m.ribbon.n_arcs(); ++i) {
                CHECK(std::fabs(twice.coords.a[i] - m.a[i]) <= 1e-5 * std::max(1.0, m.a[i]));
            }
            ++done;
        } catch (const NonFlippable&) {
            continue;
        } catch (const NumericalClosureFailure&) {
            ++refused;
            continue;
        }
    }
    CHECK(done >= 80);
    CHECK(refused <= 10);
}

TEST_CASE("flip length agrees with the merged-segment octagon relation") {
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_surface(rng, 2, 3, 0.3, 3.0);
        const int arc = static_cast<int>(rng() % m.ribbon.n_arcs());
        try {
            const auto res = flip(m, arc);
            const double oracle = flip_length_oracle(m, arc);
            CHECK(res.move.new_length == doctest::Approx(oracle).epsilon(1e-9));
        } catch (const NonFlippable&) {
            continue;
        }
    }
}

TEST_CASE("flip on the symmetric torus keeps the boundary length") {
    const auto m = symmetric_torus();
    const auto res = flip(m, 1);
    CHECK(circumferences(res.coords)[0] ==
          doctest::Approx(12.0 * std::asinh(0.5)).epsilon(1e-10));
    CHECK(res.move.old_length == doctest::Approx(2.0 * std::asinh(1.0)));
}

TEST_CASE("flip rejects an arc with one hexagon on both sides") {
    const auto m = pants_with_loop_hexagon();
    REQUIRE(m.ribbon.sigma0_orbit_of(0) == m.ribbon.sigma0_orbit_of(1));
    CHECK_THROWS_AS(flip(m, 0), NonFlippable);
}

TEST_CASE("find_spine: an already spinal surface needs no flips") {
    const auto res = find_spine(symmetric_torus());
    CHECK(res.flips.empty());
    CHECK(res.support_arcs.size() == 3);
    CHECK(res.zero_arcs.empty());
    for (double w : res.system.weights) {
        CHECK(w == doctest::Approx(2.0 * std::asinh(0.5)).epsilon(1e-12));
    }
    CHECK(res.system.total_boundary == doctest::Approx(12.0 * std::asinh(0.5)).epsilon(1e-12));
}

TEST_CASE("find_spine flips a dominant arc out of the system") {
    // arc 0 is much longer than the others, so its width starts negative
    const auto m = MaximalCoordinates::create(one_holed_torus_ribbon(), {3.0, 0.5, 0.5});
    REQUIRE(all_widths(m).per_arc[0] < 0.0);
    const auto res = find_spine(m);
    CHECK(res.flips.size() >= 1);
    for (double w : res.final_weights) CHECK(w >= 0.0);
    CHECK(circumferences(res.final_coords)[0] == doctest::Approx(circumferences(m)[0]).epsilon(1e-9));
}

TEST_CASE("find_spine invariants on a random corpus") {
    Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_surface(rng, 3, 4, 0.3, 3.0);
        const auto p_before = circumferences(m);
        const auto res = find_spine(m);

        for (double w : res.final_weights) CHECK(w >= -1e-10);
        CHECK(res.system.ribbon.classify_complement().proper);

        const auto p_after = circumferences(res.final_coords);
        for (size_t k = 0; k < p_before.size(); ++k) {
            CHECK(std::fabs(p_after[k] - p_before[k]) <= 1e-8 * std::max(1.0, p_before[k]));
        }

        // spinal widths obey the transverse-length bound
        const auto t = t_lengths(res.final_coords);
        for (int d = 0; d < res.final_coords.ribbon.n_darts(); ++d) {
            CHECK(dart_width(res.final_coords, d) <= 0.5 * t[arc_of_dart(d)] + 1e-9);
        }
    }
}

TEST_CASE("find_spine respects the flip cap") {
    const auto m = MaximalCoordinates::create(one_holed_torus_ribbon(), {4.0, 0.4, 0.4});
    REQUIRE(all_widths(m).per_arc[0] < 0.0);
    SpineOptions opts;
    opts.max_flips = 0; // default cap: fine
    CHECK_NOTHROW(find_spine(m, opts));
    // a starved budget must fail loudly, not silently return
    SpineOptions strict;
    strict.max_flips = 1;
    const auto deep = MaximalCoordinates::create(one_holed_torus_ribbon(), {6.0, 0.2, 0.2});
    if (all_widths(deep).per_arc[0] < 0.0) {
        try {
            const auto res = find_spine(deep, strict);
            CHECK(res.flips.size() <= 1);
        } catch (const FlipLimitExceeded&) {
            CHECK(true);
        }
    }
}

TEST_CASE("spinal data is independent of the flip-related starting system") {
    Rng rng(35);
    int done = 0;
    while (done < 50) {
        const auto m = random_surface(rng, 2, 3, 0.3, 3.0);
        const int arc = static_cast<int>(rng() % m.ribbon.n_arcs());
        MaximalCoordinates other = m;
        try {
            other = flip(m, arc).coords;
        } catch (const NonFlippable&) {
            continue;
        }
        const auto s1 = find_spine(m);
        const auto s2 = find_spine(other);
        REQUIRE(s1.support_arcs.size() == s2.support_arcs.size());

        auto key = [](const SpineResult& s) {
            std::vector<std::pair<double, double>> k;
            for (size_t i = 0; i < s.support_arcs.size(); ++i) {
                k.emplace_back(s.system.weights[i], s.final_coords.a[s.support_arcs[i]]);
            }
            std::sort(k.begin(), k.end());
            return k;
        };
        const auto k1 = key(s1), k2 = key(s2);
        for (size_t i = 0; i < k1.size(); ++i) {
            CHECK(std::fabs(k1[i].first - k2[i].first) <= 1e-6);
            CHECK(std::fabs(k1[i].second - k2[i].second) <= 1e-6);
        }
        ++done;
    }
}

TEST_CASE("solve_widths: symmetric torus target inverts the width formula") {
    const double c = 2.0 * std::asinh(0.5);
    const auto rep = solve_widths(one_holed_torus_ribbon(), {c, c, c});
    for (double a : rep.a) CHECK(std::fabs(a - 2.0 * std::asinh(1.0)) <= 1e-8);
    CHECK(rep.residual <= 1e-9);
}

TEST_CASE("solve_widths: uniform targets scale monotonically") {
    double prev_a = std::numeric_limits<double>::infinity();
    for (double c : {0.1, 1.0, 10.0}) {
        const auto rep = solve_widths(one_holed_torus_ribbon(), {c, c, c});
        CHECK(rep.residual <= 1e-9);
        CHECK(rep.a[0] < prev_a);
        prev_a = rep.a[0];
    }
}

TEST_CASE("solve_widths round trip against find_spine") {
    Rng rng(36);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_surface(rng, 2, 3, 0.3, 3.0);
        const auto spine_res = find_spine(m);
        // feed the spinal weights back through the inverse map
        const auto rep = solve_widths(spine_res.final_coords.ribbon, spine_res.final_weights);
        const auto w =
            all_widths(MaximalCoordinates::create(spine_res.final_coords.ribbon, rep.a)).per_arc;
        for (int i = 0; i < spine_res.final_coords.ribbon.n_arcs(); ++i) {
            CHECK(std::fabs(w[i] - spine_res.final_weights[i]) <= 1e-6);
        }
    }
}

TEST_CASE("solve_widths rejects bad targets") {
    const auto torus = one_holed_torus_ribbon();
    CHECK_THROWS_AS(solve_widths(torus, {1.0, -0.5, 1.0}), InvalidTarget);
    CHECK_THROWS_AS(solve_widths(torus, {0.0, 0.0, 0.0}), InvalidTarget);
    CHECK_THROWS_AS(solve_widths(torus, {1.0, 1.0}), InvalidTarget);
    auto [reduced, ignored] = torus.restricted({true, true, false});
    (void)ignored;
    CHECK_THROWS_AS(solve_widths(reduced, {1.0, 1.0}), InvalidTarget);

    // support that does not quasi-fill: only the self-glued arc of the
    // pants system below carries weight
    const auto pants_loop = pants_with_loop_hexagon();
    CHECK_THROWS_AS(solve_widths(pants_loop.ribbon, {1.0, 0.0, 0.0}), InvalidTarget);
}

TEST_CASE("solve_widths reports its best iterate when starved") {
    SolveOptions opts;
    opts.max_iterations = 1;
    opts.initial = std::vector<double>{4.0, 0.3, 0.9};
    try {
        solve_widths(one_holed_torus_ribbon(), {0.9, 0.4, 0.7}, opts);
        CHECK(false);
    } catch (const NoConvergence& e) {
        CHECK(e.best.size() == 3);
        CHECK(e.residual > 0.0);
        CHECK(std::isfinite(e.residual));
    }
}
