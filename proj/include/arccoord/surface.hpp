#pragma once

#include <vector>

#include "arccoord/hex.hpp"
#include "arccoord/ribbon.hpp"

namespace arccoord {

// A hyperbolic structure in the a-length chart of a maximal arc system.
struct MaximalCoordinates {
    RibbonStructure ribbon;
    std::vector<double> a; // per arc, > 0

    static MaximalCoordinates create(RibbonStructure ribbon, std::vector<double> a_lengths);
};

// Per-dart and per-arc widths of a maximal system.
struct Widths {
    std::vector<double> per_dart; // w(dart), signed
    std::vector<double> per_arc;  // w(arc) = w(fwd) + w(bwd)
};

struct CircleLayout {
    std::vector<int> darts;   // endpoints in positive cyclic order
    std::vector<double> gaps; // gaps[i] runs from darts[i] to darts[i+1 mod size]
    double circumference = 0.0;
};

// Boundary circles cut into gaps by the arc endpoints. Construction
// cross-checks the two width formulas per dart and throws
// ConventionMismatch if they disagree beyond tolerance.
struct BoundaryLayout {
    std::vector<CircleLayout> circles;
    double total_boundary = 0.0;
    std::vector<double> gap_by_dart; // gap from each dart's endpoint to the next
    std::vector<int> position_index; // index into circles[circle_of(dart)].darts

    double gap_after(int dart) const { return gap_by_dart[dart]; }
    int position_of(int dart) const { return position_index[dart]; }

    static BoundaryLayout create(const MaximalCoordinates& m, double check_tol = 1e-8);
};

// Length of the gap that follows `dart` along its boundary circle,
// computed from the sigma0-orbit (hexagon) containing the dart.
double gap_after_dart(const MaximalCoordinates& m, int dart);

// Oriented width of a dart from its hexagon, by the direct formula.
double dart_width(const MaximalCoordinates& m, int dart);

Widths all_widths(const MaximalCoordinates& m);

std::vector<double> t_lengths(const MaximalCoordinates& m);

// Boundary circumferences p_k, one per circle (0 for circles met by no arc).
std::vector<double> circumferences(const MaximalCoordinates& m);

// Distance from the endpoint of dart_i to the endpoint of dart_j along
// their common circle, in the positive direction. Throws DifferentCircles.
double boundary_distance(const BoundaryLayout& layout,
                         const RibbonStructure& ribbon,
                         int dart_i,
                         int dart_j);

// A decorated (cusped) structure: lambda-lengths plus projective weights.
struct DecoratedStructure {
    RibbonStructure ribbon;
    std::vector<double> lambda;    // per arc, > 0
    std::vector<double> p_weights; // point of the (n-1)-simplex
};

// Decorated approximation of a small-boundary surface: requires the total
// boundary length L <= 1, defines theta by sin(theta) = L and sets
// lambda_alpha = tan(theta/2) * exp(a_alpha / 2). Throws BoundaryTooLong.
DecoratedStructure lambda_lengths(const MaximalCoordinates& m);

// Penner simplicial coordinates X per dart, X(arc) = X(fwd) + X(bwd).
struct SimplicialCoordinates {
    std::vector<double> per_dart;
    std::vector<double> per_arc;
};

SimplicialCoordinates simplicial_coordinates(const DecoratedStructure& d);

} // namespace arccoord
