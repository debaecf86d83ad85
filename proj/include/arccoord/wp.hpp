#pragma once

#include <vector>

#include "arccoord/surface.hpp"

namespace arccoord {

struct SquareMatrix {
    int n = 0;
    std::vector<double> v;

    static SquareMatrix zero(int n) { return {n, std::vector<double>(static_cast<size_t>(n) * n, 0.0)}; }
    double& at(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return v[static_cast<size_t>(i) * n + j]; }
    double max_abs() const;
    double antisymmetry_defect() const; // max |M + M^T|
};

// J * M * J^T: pushforward of a bivector (or pullback of a 2-form) under
// the coordinate change with Jacobian J.
SquareMatrix congruence(const SquareMatrix& M, const SquareMatrix& J);

// Coefficients of the Weil-Petersson bivector eta in the a-length basis:
// entry (i, j) = eta(da_i, da_j), assembled from the double sum over
// ordered endpoint pairs on each boundary circle with kernel
// sinh(p_k/2 - d(y_i, y_j)) / sinh(p_k/2).
struct PoissonBivector {
    SquareMatrix coeffs;
};

// One boundary circle reduced to what the bivector needs: its length and
// the (arc, position) of every arc endpoint on it.
struct CircleEndpoints {
    double circumference = 0.0;
    std::vector<std::pair<int, double>> endpoints; // (arc index, position)
};

PoissonBivector poisson_from_endpoints(int n_arcs, const std::vector<CircleEndpoints>& circles);
PoissonBivector poisson_bivector(const MaximalCoordinates& m);

// || eta * grad p_k ||_inf with a central finite-difference gradient,
// step h_i = h_scale * max(1, a_i). Boundary lengths are Casimirs, so this
// vanishes up to discretization error.
double casimir_residual(const MaximalCoordinates& m, int circle, double h_scale = 1e-6);

// The piecewise-linear bivector of the large-boundary limit: every
// trivalent vertex r with cyclically ordered edges (r1, r2, r3) contributes
// +1/2 to (r1,r2), (r2,r3), (r3,r1) and -1/2 to the transposes.
struct KontsevichBivector {
    SquareMatrix coeffs;
};

KontsevichBivector kontsevich_bivector(const RibbonStructure& trivalent_graph);

// eta in the normalized width coordinates: w~ = w / (L/2) with L the total
// boundary length, scaled by (1 + L/2)^2. Converges entrywise to the
// Kontsevich bivector of the spinal graph as L grows.
struct NormalizedBivector {
    SquareMatrix coeffs;
    double total_boundary = 0.0;
};

NormalizedBivector normalized_bivector(const MaximalCoordinates& m, double fd_step = 1e-6);

// Coefficients of Penner's form in the reduced-length basis: each ideal
// triangle with cyclically ordered sides (t1, t2, t3) contributes -1/2 to
// (t1,t2), (t2,t3), (t3,t1) and +1/2 to the transposes.
struct PennerForm {
    SquareMatrix coeffs;
};

PennerForm penner_form(const DecoratedStructure& d);

// Central finite-difference gradient of p_circle with respect to the
// a-lengths, step h_i = h_scale * max(1, a_i).
std::vector<double> boundary_length_gradient(const MaximalCoordinates& m, int circle,
                                             double h_scale = 1e-6);

} // namespace arccoord
