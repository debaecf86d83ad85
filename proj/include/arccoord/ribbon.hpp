#pragma once

#include <utility>
#include <vector>

#include "arccoord/errors.hpp"

namespace arccoord {

// Topological type of the bordered surface: genus g with n > 0 boundary
// circles, chi = 2 - 2g - n < 0.
struct SurfaceSignature {
    int genus = 0;
    int n_boundary = 0;

    int euler() const { return 2 - 2 * genus - n_boundary; }
};

// Darts are ints in [0, 2N): darts 2k and 2k+1 are the two orientations of
// arc k, so sigma1 is the pairing d -> d^1 and needs no storage.
inline int arc_of_dart(int dart) { return dart >> 1; }
inline int sigma1(int dart) { return dart ^ 1; }

struct ValidationReport {
    int sigma0_orbits = 0;
    int sigma1_orbits = 0;
    int sigma_inf_orbits = 0;
    bool connected = false;
};

struct RegionDescriptor {
    int polygon_sides = 0;          // 2m for a sigma0-orbit of size m
    std::vector<int> darts;         // the orbit, in sigma0 order
};

struct ComplementReport {
    std::vector<RegionDescriptor> regions;
    bool proper = false;            // quasi-fills the declared surface
    bool euler_consistent = false;  // #sigma0-orbits - N == chi(S)
    bool connected = false;
    bool all_circles_met = false;   // every declared circle carries a dart
};

// An arc system on a bordered surface, encoded by its dart permutations:
// sigma_inf sends a dart to the dart whose endpoint immediately precedes it
// along the boundary orientation, sigma1 reverses orientation (implicit),
// and sigma0 = sigma1 * sigma_inf^{-1} rotates each complementary region.
// Immutable after construction; validation happens in the factory.
class RibbonStructure {
public:
    // Throws InvalidPermutation / CircleMismatch on malformed input.
    static RibbonStructure create(SurfaceSignature sig,
                                  int n_arcs,
                                  std::vector<int> sigma_inf,
                                  std::vector<int> circle_of_dart);

    // Same, but with sigma1 given explicitly; it must equal the 2k/2k+1
    // pairing (fixed-point-free, involutive) or InvalidPermutation is thrown.
    static RibbonStructure create_with_sigma1(SurfaceSignature sig,
                                              int n_arcs,
                                              const std::vector<int>& sigma1_explicit,
                                              std::vector<int> sigma_inf,
                                              std::vector<int> circle_of_dart);

    const SurfaceSignature& signature() const { return sig_; }
    int n_arcs() const { return n_arcs_; }
    int n_darts() const { return 2 * n_arcs_; }

    int sigma_inf(int dart) const { return sigma_inf_[dart]; }
    // Successor along the boundary: the dart whose endpoint comes next in
    // the positive direction (= sigma_inf^{-1}).
    int next_on_circle(int dart) const { return sigma_inf_inv_[dart]; }
    int sigma0(int dart) const { return sigma0_[dart]; }
    int circle_of(int dart) const { return circle_of_[dart]; }

    const std::vector<int>& sigma_inf() const { return sigma_inf_; }
    const std::vector<int>& circle_of() const { return circle_of_; }

    // Orbits of sigma0, each in cyclic order; cached at construction.
    const std::vector<std::vector<int>>& sigma0_orbits() const { return orbits0_; }
    // Index into sigma0_orbits() of the orbit containing the dart.
    int sigma0_orbit_of(int dart) const { return orbit0_of_[dart]; }

    // Darts ending on circle k, in successor (positive) cyclic order.
    // Empty when the circle carries no arc endpoint.
    const std::vector<int>& circle_darts(int circle) const { return circle_darts_[circle]; }

    ValidationReport validate() const;
    bool is_maximal() const;
    ComplementReport classify_complement() const;

    // Relabels arcs by arc_perm (old arc a becomes arc_perm[a]) and flips
    // the dart pair of arc a when flip_orientation[a] is set. Orbit counts
    // and all derived geometry are invariant under this.
    RibbonStructure relabeled(const std::vector<int>& arc_perm,
                              const std::vector<bool>& flip_orientation) const;

    // Restricts to the arcs with keep[arc] set, contracting sigma_inf past
    // the removed endpoints. Circle labels are preserved. Returns the
    // reduced structure plus old-arc index per new arc.
    std::pair<RibbonStructure, std::vector<int>> restricted(const std::vector<bool>& keep) const;

private:
    RibbonStructure() = default;
    void build_derived();

    SurfaceSignature sig_;
    int n_arcs_ = 0;
    std::vector<int> sigma_inf_;
    std::vector<int> sigma_inf_inv_;
    std::vector<int> sigma0_;
    std::vector<int> circle_of_;
    std::vector<std::vector<int>> orbits0_;
    std::vector<int> orbit0_of_;
    std::vector<std::vector<int>> circle_darts_;
};

// Canonical fixtures used across tests and docs.
RibbonStructure one_holed_torus_ribbon();
RibbonStructure pair_of_pants_ribbon();

} // namespace arccoord
