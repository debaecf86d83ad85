#pragma once

#include <string>
#include <vector>

#include "arccoord/ribbon.hpp"

namespace arccoord {

// A proper arc system with positive weights: the combinatorial input of the
// flat-surface construction. Arcs with zero weight are dropped by the
// factory; the system must stay proper.
struct WeightedRibbonGraph {
    RibbonStructure ribbon;
    std::vector<double> weights;

    // Drops zero-weight arcs, validates properness (ImproperSystem on
    // failure). Weights must be >= 0 and finite.
    static WeightedRibbonGraph create(const RibbonStructure& ribbon, std::vector<double> weights);
};

struct GraphVertex {
    std::vector<int> darts; // the sigma0-orbit, cyclic
    int valence = 0;
};

struct CylinderData {
    int circle = -1;
    double circumference = 0.0;
    std::vector<int> boundary_word; // darts of the sigma_inf-orbit, cyclic
};

// One semi-infinite tile per dart, [0, w(arc)] x [0, inf], with
//   (u, 0, e) ~ (w - u, 0, reverse(e))   along the bottom edge and
//   (w, v, e) ~ (0, v, next_on_circle(e)) along the sides.
// The bottom edges glue into the critical graph G; the sides chain the
// tiles of each boundary orbit into a flat cylinder.
struct FlatTileComplex {
    WeightedRibbonGraph graph;
    std::vector<GraphVertex> vertices;  // one per sigma0-orbit
    std::vector<CylinderData> cylinders; // one per sigma_inf-orbit
    int genus = 0;
};

FlatTileComplex build_flat_surface(const WeightedRibbonGraph& g);

// Per-vertex zero orders k - 2 of the Jenkins-Strebel differential, where
// k is the vertex valence.
std::vector<int> zero_orders(const FlatTileComplex& c);

// Degree bookkeeping: sum of zero orders minus twice the cylinder count
// must equal 4g - 4.
struct DivisorCheck {
    int zero_order_sum = 0;
    int n_double_poles = 0;
    int expected_4g_minus_4 = 0;
    bool consistent = false;
};

DivisorCheck divisor_check(const FlatTileComplex& c);

// Quadratic residue at each point at infinity: -(p_i / 2 pi)^2.
std::vector<double> quadratic_residues(const FlatTileComplex& c);

// Decomposes the horizontal level set {y = height > 0} into closed loops by
// chasing side gluings; returns the loops as dart sequences. Their number
// equals the number of cylinders.
std::vector<std::vector<int>> horizontal_loops(const FlatTileComplex& c);

// Net of the tile complex truncated at the given height: one rectangle per
// dart, bottom-edge pairings annotated, critical graph drawn at y = 0.
std::string render_svg(const FlatTileComplex& c, double truncation_height);

// Exact circumference sums for rational weights (and exact scaling checks).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    Rational operator+(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// Circumference of each sigma_inf-orbit as an exact rational sum of the
// weights of the arcs it traverses (with multiplicity).
std::vector<Rational> exact_circumferences(const RibbonStructure& ribbon,
                                           const std::vector<Rational>& weights);

} // namespace arccoord
