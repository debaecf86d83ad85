#pragma once

#include <array>

#include "arccoord/errors.hpp"

namespace arccoord {

// The three arc sides of a right-angled hexagon, in the cyclic order in
// which they appear along its boundary. All hyperbolic lengths, all > 0.
struct HexTriple {
    double a_i;
    double a_j;
    double a_k;
};

// arccosh(1 + u) for u >= 0 without the cancellation of acosh near 1.
// Arguments u in [-1e-12, 0) are snapped to 0; anything lower throws.
double acosh1p(double u);

// sinh(x)/sinh(y) for y > 0, stable when x and/or y exceed the range where
// sinh itself overflows (|x|, y beyond ~700).
double sinh_ratio(double x, double y);

// T(a) = 2 arcsinh(1 / sinh(a/2)): the transverse length of an arc of
// length a. Involutive and strictly decreasing on (0, inf).
double t_length(double a);

// Length of the hexagon boundary side whose adjacent arc sides have
// lengths adj1, adj2 and whose opposite arc side has length opposite:
//
//   cosh d = (cosh adj1 * cosh adj2 + cosh opposite) / (sinh adj1 * sinh adj2)
//
// evaluated in the cancellation-free form cosh d - 1 =
// (cosh(adj1 - adj2) + cosh opposite) / (sinh adj1 * sinh adj2).
double hexagon_boundary_segment(double opposite, double adj1, double adj2);

// Which side of the HexTriple a width refers to.
enum class HexSide { i, j, k };

// Oriented width at the chosen side, straight from the side lengths:
//
//   sinh w = (s_j^2 + s_k^2 - s_i^2) / (2 s_j s_k sinh(a_i / 2)),
//
// with s = cosh(a/2). May be negative; a_i = 0 is rejected as degenerate.
double oriented_width_direct(const HexTriple& hex, HexSide which);

// The same oriented width from the three boundary segments of the hexagon:
// w = (d_near_after + d_near_before - d_far) / 2, where the two near
// segments are the ones adjacent to the chosen arc side.
double oriented_width_from_segments(double d_near_after, double d_near_before, double d_far);

// The three boundary segments of a hexagon, ordered so segments[m] follows
// arc side m along the boundary (segments[0] lies between sides i and j and
// is opposite side k, and so on cyclically).
std::array<double, 3> hexagon_segments(const HexTriple& hex);

// Oriented width of side i computed through hexagon_segments; agrees with
// oriented_width_direct to ~1e-10 and serves as its independent oracle.
double oriented_width_via_segments(const HexTriple& hex, HexSide which);

} // namespace arccoord
