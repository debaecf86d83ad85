#pragma once

#include <string>
#include <vector>

#include "arccoord/spine.hpp"
#include "arccoord/wp.hpp"

namespace arccoord {

// One solved member of the interpolating family.
struct ScaleRecord {
    double target_total = 0.0;
    bool solved = false;
    std::string error;            // solver failure message when !solved

    std::vector<double> a;        // a-lengths
    std::vector<double> t;        // t-lengths
    std::vector<double> w_arc;    // per-arc widths
    std::vector<double> w_dart;   // oriented widths
    double actual_total = 0.0;

    // max over darts of |2 w(dart) / t_arc - 1|; tends to 0 as the total
    // boundary grows.
    double ratio_diagnostic = 0.0;
    // ||eta~ - H~||_inf against the Kontsevich bivector of the system.
    double kontsevich_deviation = 0.0;

    // Present when the total boundary is <= 1: the decorated record and the
    // max relative gap between normalized widths and simplicial coordinates.
    bool has_decorated = false;
    std::vector<double> lambda;
    double simplicial_gap = 0.0;
};

struct FamilyScan {
    RibbonStructure ribbon;
    std::vector<double> projective_weights; // sums to 1
    std::vector<ScaleRecord> records;       // one per requested total
};

struct ScanOptions {
    bool warm_start = true;  // chain each solve from the previous scale
    bool parallel = false;   // solve scales concurrently (needs cold starts)
    SolveOptions solve;
    double fd_step = 1e-6;   // for the normalized-bivector Jacobian
};

// Solves the family with fixed projective widths over the listed total
// boundary lengths. Solver failures are recorded per scale and the scan
// continues. Throws InvalidTarget on a non-proper or non-positive weight
// vector.
FamilyScan family_scan(const RibbonStructure& maximal_ribbon,
                       const std::vector<double>& projective_weights,
                       const std::vector<double>& totals,
                       const ScanOptions& opts = {});

} // namespace arccoord
