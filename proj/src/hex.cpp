#include "arccoord/hex.hpp"

#include <cmath>

namespace arccoord {

namespace {

constexpr double kSnapBelowOne = 1e-12;

void require_positive(double a, const char* who) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw NonPositiveLength(std::string(who) + ": length must be finite and > 0");
    }
}

} // namespace

double acosh1p(double u) {
    if (u < 0.0) {
        if (u < -kSnapBelowOne) {
            throw NumericalClosureFailure("acosh1p: argument below 1 beyond snap tolerance");
        }
        u = 0.0;
    }
    // acosh(1+u) = log1p(u + sqrt(u*(u+2)))
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

double sinh_ratio(double x, double y) {
    // For moderate arguments the direct quotient is fine.
    constexpr double kBig = 350.0;
    if (y <= kBig && std::fabs(x) <= kBig) {
        return std::sinh(x) / std::sinh(y);
    }
    // sinh(t) = sign(t) * exp(|t| - log 2) * (1 - exp(-2|t|)), so
    // sinh(x)/sinh(y) = sign(x) exp(|x|-y) * (1-e^{-2|x|})/(1-e^{-2y}).
    const double ax = std::fabs(x);
    const double sign = (x < 0.0) ? -1.0 : (x > 0.0 ? 1.0 : 0.0);
    if (sign == 0.0) return 0.0;
    const double corr = -std::expm1(-2.0 * ax) / -std::expm1(-2.0 * y);
    return sign * std::exp(ax - y) * corr;
}

double t_length(double a) {
    require_positive(a, "t_length");
    return 2.0 * std::asinh(1.0 / std::sinh(0.5 * a));
}

double hexagon_boundary_segment(double opposite, double adj1, double adj2) {
    require_positive(opposite, "hexagon_boundary_segment");
    require_positive(adj1, "hexagon_boundary_segment");
    require_positive(adj2, "hexagon_boundary_segment");
    // Long-double internals: segments adjacent to two long arcs are
    // exponentially small and their absolute accuracy is what the flip
    // inverse amplifies back to O(1) lengths.
    const long double u = (std::cosh(static_cast<long double>(adj1) - adj2) + std::cosh(opposite)) /
                          (std::sinh(adj1) * std::sinh(adj2));
    const long double d = std::log1p(u + std::sqrt(u * (u + 2.0L)));
    return static_cast<double>(d);
}

double oriented_width_direct(const HexTriple& hex, HexSide which) {
    for (double side : {hex.a_i, hex.a_j, hex.a_k}) {
        if (side == 0.0) throw DegenerateHexagon("oriented_width_direct: zero side length");
        if (!(side > 0.0) || !std::isfinite(side)) {
            throw NonPositiveLength("oriented_width_direct: length must be finite and > 0");
        }
    }
    double ai = hex.a_i, aj = hex.a_j, ak = hex.a_k;
    switch (which) {
        case HexSide::i: break;
        case HexSide::j: std::swap(ai, aj); break;
        case HexSide::k: std::swap(ai, ak); break;
    }
    const double shi = std::sinh(0.5 * ai);
    if (shi == 0.0) {
        throw DegenerateHexagon("oriented_width_direct: a_i = 0");
    }
    const double si2 = 1.0 + shi * shi; // cosh^2(a_i/2)
    const double sj = std::cosh(0.5 * aj);
    const double sk = std::cosh(0.5 * ak);
    const double num = sj * sj + sk * sk - si2;
    return std::asinh(num / (2.0 * sj * sk * shi));
}

double oriented_width_from_segments(double d_near_after, double d_near_before, double d_far) {
    return 0.5 * (d_near_after + d_near_before - d_far);
}

std::array<double, 3> hexagon_segments(const HexTriple& hex) {
    return {
        hexagon_boundary_segment(hex.a_k, hex.a_i, hex.a_j), // between i and j
        hexagon_boundary_segment(hex.a_i, hex.a_j, hex.a_k), // between j and k
        hexagon_boundary_segment(hex.a_j, hex.a_k, hex.a_i), // between k and i
    };
}

double oriented_width_via_segments(const HexTriple& hex, HexSide which) {
    const auto seg = hexagon_segments(hex);
    switch (which) {
        case HexSide::i: return oriented_width_from_segments(seg[0], seg[2], seg[1]);
        case HexSide::j: return oriented_width_from_segments(seg[1], seg[0], seg[2]);
        case HexSide::k: return oriented_width_from_segments(seg[2], seg[1], seg[0]);
    }
    return 0.0; // unreachable
}

} // namespace arccoord
