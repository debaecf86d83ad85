#pragma once

#include <array>
#include <optional>
#include <vector>

#include "arccoord/surface.hpp"

namespace arccoord {

// -- hyperbolic plane primitives (hyperboloid model) -------------------------
//
// Vectors live in R^{2,1} with <u,v> = u.x v.x + u.y v.y - u.t v.t.
// Points are timelike unit vectors (t > 0), geodesics are represented by
// their spacelike unit normals. Components are long double: frame marching
// around a hexagon cancels intermediates of size e^(diameter), and the
// extra mantissa keeps flip lengths accurate on skewed surfaces.

struct MVec {
    long double t = 0.0L, x = 0.0L, y = 0.0L;
};

long double minkowski_dot(const MVec& u, const MVec& v);

// Distance between two disjoint geodesics with unit normals n1, n2
// (their common perpendicular length): arccosh |<n1, n2>|.
double geodesic_distance(const MVec& n1, const MVec& n2);

// Distance between two points on the hyperboloid: arccosh(-<p, q>).
double point_distance(const MVec& p, const MVec& q);

// Orthonormal frame: a point, a unit tangent, and the unit normal of the
// geodesic through the point in that direction.
struct Frame {
    MVec pos;     // timelike
    MVec dir;     // spacelike tangent
    MVec normal;  // spacelike, normal of the current geodesic

    static Frame base(); // (1,0,0) pointing along (0,1,0) with normal (0,0,1)
    Frame advanced(double length) const; // translate along the geodesic
    Frame advanced_l(long double length) const;
    Frame turned_left() const;           // rotate tangent by +pi/2
    void renormalize();                  // re-orthonormalize against drift
};

// A realized right-angled hexagon: geodesic normals and corner points for
// the six sides in boundary order.
struct RealizedHexagon {
    std::array<MVec, 6> side_normals;
    std::array<MVec, 6> corners; // corners[i] = end of side i
    double closure_error = 0.0;
};

// Marches the six sides from `start`; throws NumericalClosureFailure if the
// frame fails to close up within closure_tol. The closure error is the
// frame drift relative to the largest intermediate magnitude, which is the
// march's honest accuracy measure: it scales with how consistent the six
// side lengths are at their own precision.
RealizedHexagon realize_hexagon_sides(const std::array<long double, 6>& side_lengths,
                                      const Frame& start,
                                      double closure_tol = 1e-8);

// Realizes the hexagon with arc sides (a_i, a_j, a_k) and the boundary
// segments between them, producing sides in the order
// (a_i, d_k, a_j, d_i, a_k, d_j).
RealizedHexagon realize_hexagon(const HexTriple& hex, double closure_tol = 1e-8);

// -- flips -------------------------------------------------------------------

struct FlipMove {
    int arc = -1;
    int hexagon_fwd = -1; // sigma0-orbit index adjacent to the forward dart
    int hexagon_bwd = -1;
    double old_length = 0.0;
    double new_length = 0.0;
};

struct FlipResult {
    MaximalCoordinates coords;
    FlipMove move;
};

// Replaces arc `arc` by the other diagonal of the octagon formed by its two
// adjacent hexagons. The new a-length is the distance between the two
// boundary geodesics the new arc joins, computed from a half-plane
// realization of both hexagons glued along the old arc. The underlying
// surface is unchanged. Throws NonFlippable when both sides of the arc lie
// on the same hexagon.
FlipResult flip(const MaximalCoordinates& m, int arc, double closure_tol = 1e-8);

// -- the spine map W and its inverse ------------------------------------------

// A proper (possibly non-maximal) system with positive weights: the image
// datum of the spine map.
struct WeightedArcSystem {
    RibbonStructure ribbon;
    std::vector<double> weights; // per arc of `ribbon`, > 0
    double total_boundary = 0.0;
};

struct SpineOptions {
    int max_flips = 0;           // 0 means the default cap 10 * N^2
    double zero_tol = 1e-10;     // widths within [-zero_tol, zero_tol] count as 0
    double closure_tol = 1e-8;
};

struct SpineResult {
    WeightedArcSystem system;          // reduced to the positive support
    std::vector<int> support_arcs;     // arcs of `final_coords` kept in `system`
    std::vector<int> zero_arcs;        // arcs with width snapped to 0
    MaximalCoordinates final_coords;   // spinal maximal system + a-lengths
    std::vector<double> final_weights; // per arc of final_coords
    std::vector<FlipMove> flips;
};

// Flips every negative-width arc (most negative first, ties to the lowest
// arc index) until all widths are >= 0; throws FlipLimitExceeded past the
// iteration cap.
SpineResult find_spine(const MaximalCoordinates& m, const SpineOptions& opts = {});

struct SolveOptions {
    double tol = 1e-9;        // sup-norm residual target on widths
    double fd_step = 1e-6;    // relative finite-difference step
    int max_iterations = 120;
    int max_halvings = 30;
    std::optional<std::vector<double>> initial; // warm start, per arc
};

struct SolveReport {
    std::vector<double> a;
    double residual = 0.0;
    int iterations = 0;
};

// Solves for a-lengths realizing the given per-arc width targets on a
// maximal system (entries may be 0 for completion arcs; positive support
// must be proper). Damped Newton with a finite-difference Jacobian.
// Throws InvalidTarget / NoConvergence.
SolveReport solve_widths(const RibbonStructure& completion,
                         const std::vector<double>& target_widths,
                         const SolveOptions& opts = {});

} // namespace arccoord
