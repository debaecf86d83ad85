#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "arccoord/hex.hpp"

using namespace arccoord;

namespace {

// Independent long-double evaluation of the segment cosine rule, kept as
// the oracle for the double-precision implementation.
long double segment_oracle(long double opposite, long double adj1, long double adj2) {
    return acoshl((coshl(adj1) * coshl(adj2) + coshl(opposite)) / (sinhl(adj1) * sinhl(adj2)));
}

} // namespace

TEST_CASE("t_length fixed point and involution") {
    const double a_star = 2.0 * std::asinh(1.0); // sinh(a/2) = 1 forces T(a) = a
    CHECK(std::fabs(t_length(a_star) - a_star) < 1e-12);
    CHECK(std::fabs(t_length(t_length(1.0)) - 1.0) < 1e-12);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(1e-3, 30.0);
    for (int i = 0; i < 10000; ++i) {
        const double a = U(rng);
        CHECK(std::fabs(t_length(t_length(a)) - a) / a < 1e-12);
    }
}

TEST_CASE("t_length long-arc value and asymptote") {
    const double t10 = t_length(10.0);
    CHECK(t10 == doctest::Approx(0.026952195877213259).epsilon(1e-14));
    // 4 e^{-a/2} asymptote
    CHECK(std::fabs(t10 - 4.0 * std::exp(-5.0)) < 1e-6);
}

TEST_CASE("t_length is strictly decreasing") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> U(0.01, 20.0);
    for (int i = 0; i < 2000; ++i) {
        double a = U(rng), b = U(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        CHECK(t_length(a) > t_length(b));
    }
}

TEST_CASE("t_length rejects non-positive input") {
    CHECK_THROWS_AS(t_length(0.0), NonPositiveLength);
    CHECK_THROWS_AS(t_length(-1.0), NonPositiveLength);
}

TEST_CASE("boundary segment: symmetric hexagon with cosh a = 2 has d = a") {
    const double a = std::acosh(2.0);
    CHECK(hexagon_boundary_segment(a, a, a) == doctest::Approx(a).epsilon(1e-14));
}

TEST_CASE("boundary segment: frozen value at (1, 2, 3)") {
    const double d = hexagon_boundary_segment(1.0, 2.0, 3.0);
    CHECK(d == doctest::Approx(0.40930192092779216).epsilon(1e-13));
    CHECK(std::fabs(d - static_cast<double>(segment_oracle(1.0L, 2.0L, 3.0L))) < 1e-14);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(0.05, 20.0);
    for (int i = 0; i < 5000; ++i) {
        const double o = U(rng), x = U(rng), y = U(rng);
        const double ref = static_cast<double>(segment_oracle(o, x, y));
        CHECK(std::fabs(hexagon_boundary_segment(o, x, y) - ref) < 1e-11 * std::max(1.0, ref));
    }
}

TEST_CASE("boundary segment grows with the opposite side") {
    double prev = 0.0;
    for (double opp : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double d = hexagon_boundary_segment(opp, 0.7, 0.9);
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("oriented width: symmetric hexagon value") {
    const double a = 2.0 * std::asinh(1.0); // sinh w = 1 / (2 sinh(a/2)) = 1/2
    const HexTriple h{a, a, a};
    for (HexSide s : {HexSide::i, HexSide::j, HexSide::k}) {
        CHECK(oriented_width_direct(h, s) == doctest::Approx(std::asinh(0.5)).epsilon(1e-13));
    }
}

TEST_CASE("oriented width vanishes when s_i^2 = s_j^2 + s_k^2") {
    const double ai = 2.0 * std::acosh(std::sqrt(2.0) * std::cosh(0.5));
    CHECK(std::fabs(oriented_width_direct({ai, 1.0, 1.0}, HexSide::i)) < 1e-14);
}

TEST_CASE("oriented width is negative on long sides") {
    CHECK(oriented_width_direct({5.0, 1.0, 1.0}, HexSide::i) < 0.0);
    CHECK(oriented_width_direct({5.0, 1.0, 1.0}, HexSide::j) > 0.0);
}

TEST_CASE("oriented width rejects degenerate sides") {
    CHECK_THROWS_AS(oriented_width_direct({0.0, 1.0, 1.0}, HexSide::i), DegenerateHexagon);
    CHECK_THROWS_AS(oriented_width_direct({-1.0, 1.0, 1.0}, HexSide::i), NonPositiveLength);
    CHECK_THROWS_AS(oriented_width_direct({1.0, 0.0, 1.0}, HexSide::i), DegenerateHexagon);
}

TEST_CASE("two-way width equality over random hexagons") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> U(0.05, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const HexTriple h{U(rng), U(rng), U(rng)};
        for (HexSide s : {HexSide::i, HexSide::j, HexSide::k}) {
            worst = std::max(worst,
                             std::fabs(oriented_width_direct(h, s) - oriented_width_via_segments(h, s)));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("width from segments is plain arithmetic") {
    CHECK(oriented_width_from_segments(0.3, 0.5, 0.2) == doctest::Approx(0.3));
    CHECK(oriented_width_from_segments(0.7, 0.7, 0.7) == doctest::Approx(0.35));
}

TEST_CASE("each boundary segment is the sum of its two oriented widths") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> U(0.05, 20.0);
    for (int i = 0; i < 5000; ++i) {
        const HexTriple h{U(rng), U(rng), U(rng)};
        const auto seg = hexagon_segments(h);
        const double wi = oriented_width_direct(h, HexSide::i);
        const double wj = oriented_width_direct(h, HexSide::j);
        const double wk = oriented_width_direct(h, HexSide::k);
        CHECK(std::fabs(seg[0] - (wi + wj)) < 1e-10);
        CHECK(std::fabs(seg[1] - (wj + wk)) < 1e-10);
        CHECK(std::fabs(seg[2] - (wk + wi)) < 1e-10);
    }
}

TEST_CASE("spinal-type hexagons satisfy w <= t/2") {
    // The bound needs the vertex angles to be genuine angles, which is
    // exactly the all-widths-nonnegative case; hexagons with a dominant
    // side violate it (their dominant-side width is negative instead).
    // Comparable side lengths keep the spinal case common enough to sample.
    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> U(0.2, 3.0);
    int checked = 0;
    for (int i = 0; i < 20000 && checked < 3000; ++i) {
        const HexTriple h{U(rng), U(rng), U(rng)};
        const double wi = oriented_width_direct(h, HexSide::i);
        const double wj = oriented_width_direct(h, HexSide::j);
        const double wk = oriented_width_direct(h, HexSide::k);
        if (wi < 0.0 || wj < 0.0 || wk < 0.0) continue;
        ++checked;
        CHECK(wi <= 0.5 * t_length(h.a_i) + 1e-12);
        CHECK(wj <= 0.5 * t_length(h.a_j) + 1e-12);
        CHECK(wk <= 0.5 * t_length(h.a_k) + 1e-12);
    }
    CHECK(checked >= 3000);
}

TEST_CASE("oriented width decreases in its own side length") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0.1, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double aj = U(rng), ak = U(rng);
        double a1 = U(rng), a2 = U(rng);
        if (a1 == a2) continue;
        if (a1 > a2) std::swap(a1, a2);
        CHECK(oriented_width_direct({a1, aj, ak}, HexSide::i) >
              oriented_width_direct({a2, aj, ak}, HexSide::i));
    }
}

TEST_CASE("acosh1p: exact area and snap behavior") {
    CHECK(acosh1p(std::cosh(2.0) - 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(acosh1p(0.0) == 0.0);
    CHECK(acosh1p(-1e-13) == 0.0);
    CHECK_THROWS_AS(acosh1p(-1e-9), NumericalClosureFailure);
    // tiny arguments keep full relative precision
    CHECK(acosh1p(5e-13) == doctest::Approx(std::sqrt(1e-12)).epsilon(1e-6));
}

TEST_CASE("sinh_ratio handles overflow-range arguments") {
    CHECK(sinh_ratio(2.0, 3.0) == doctest::Approx(std::sinh(2.0) / std::sinh(3.0)).epsilon(1e-14));
    CHECK(sinh_ratio(-2.0, 3.0) ==
          doctest::Approx(std::sinh(-2.0) / std::sinh(3.0)).epsilon(1e-14));
    // sinh(x)/sinh(y) -> e^{x-y} for large x, y
    CHECK(sinh_ratio(400.0, 500.0) == doctest::Approx(std::exp(-100.0)).epsilon(1e-12));
    CHECK(sinh_ratio(-400.0, 500.0) == doctest::Approx(-std::exp(-100.0)).epsilon(1e-12));
    CHECK(sinh_ratio(0.0, 500.0) == 0.0);
    CHECK(sinh_ratio(1.0, 800.0) == doctest::Approx(std::sinh(1.0) * 2.0 * std::exp(-800.0)));
}
