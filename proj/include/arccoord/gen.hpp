#pragma once

#include <cstdint>
#include <random>

#include "arccoord/ribbon.hpp"

namespace arccoord {

using Rng = std::mt19937_64;

// Uniformly samples connected maximal ribbon structures of the given
// signature by rejection: random products of 3-cycles for sigma0 until the
// boundary count and connectivity match.
RibbonStructure random_maximal_ribbon(SurfaceSignature sig, Rng& rng);

// Random connected ribbon structure whose sigma0-orbits all have size >= 3
// (a spine-like graph with vertex valences in {3,4,5}); the signature is
// derived from the glued surface, so the result is always proper.
RibbonStructure random_proper_ribbon(int n_arcs, Rng& rng);

// Uniform a-lengths in [lo, hi].
std::vector<double> random_lengths(int n, double lo, double hi, Rng& rng);

} // namespace arccoord
