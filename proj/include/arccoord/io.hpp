#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arccoord/ribbon.hpp"
#include "arccoord/spine.hpp"
#include "arccoord/wp.hpp"

namespace arccoord {

// Parse failures carry enough context to print and exit.
struct ParseError : Error {
    using Error::Error;
};

struct SurfaceInput {
    RibbonStructure ribbon;
    std::optional<std::vector<double>> a_lengths;
    std::optional<std::vector<double>> weights;
    std::optional<std::vector<double>> scales;
};

// Reads {"genus", "boundary", "arcs", "sigma_inf", "circle_of_dart"} plus
// optional "a_lengths", "weights", "scales". Throws ParseError.
SurfaceInput read_surface_file(const std::string& path);
SurfaceInput parse_surface_json(const std::string& text);

std::string surface_to_json(const RibbonStructure& ribbon,
                            const std::vector<double>* a_lengths,
                            const std::vector<double>* weights);

// The versioned header comment every CSV output starts with.
std::string csv_header(const std::string& columns);

std::string matrix_to_csv(const SquareMatrix& m);
std::string matrix_to_json(const SquareMatrix& m);

// Per-arc coordinate table: arc, a, s, t, w_fwd, w_bwd, w.
std::string arc_table_csv(const MaximalCoordinates& m);
// Per-circle table: circle, p, gaps...
std::string circle_table_csv(const MaximalCoordinates& m);

} // namespace arccoord
