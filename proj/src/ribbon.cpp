#include "arccoord/ribbon.hpp"

#include <algorithm>
#include <numeric>

namespace arccoord {

namespace {

bool is_bijection(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> invert(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (int d = 0; d < static_cast<int>(p.size()); ++d) inv[p[d]] = d;
    return inv;
}

std::vector<std::vector<int>> orbits_of(const std::vector<int>& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.size(), 0);
    for (int d = 0; d < static_cast<int>(p.size()); ++d) {
        if (seen[d]) continue;
        std::vector<int> orbit;
        for (int e = d; !seen[e]; e = p[e]) {
            seen[e] = 1;
            orbit.push_back(e);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

} // namespace

RibbonStructure RibbonStructure::create(SurfaceSignature sig,
                                        int n_arcs,
                                        std::vector<int> sigma_inf,
                                        std::vector<int> circle_of_dart) {
    if (sig.n_boundary <= 0 || sig.genus < 0 || sig.euler() >= 0) {
        throw InvalidPermutation("surface signature must have n >= 1 and chi < 0");
    }
    if (n_arcs < 0) throw InvalidPermutation("negative arc count");
    const int nd = 2 * n_arcs;
    if (static_cast<int>(sigma_inf.size()) != nd || static_cast<int>(circle_of_dart.size()) != nd) {
        throw InvalidPermutation("sigma_inf / circle_of_dart must have one entry per dart");
    }
    if (!is_bijection(sigma_inf)) {
        throw InvalidPermutation("sigma_inf is not a bijection on the dart set");
    }
    for (int d = 0; d < nd; ++d) {
        if (circle_of_dart[d] < 0 || circle_of_dart[d] >= sig.n_boundary) {
            throw CircleMismatch("circle label out of range");
        }
    }
    RibbonStructure r;
    r.sig_ = sig;
    r.n_arcs_ = n_arcs;
    r.sigma_inf_ = std::move(sigma_inf);
    r.circle_of_ = std::move(circle_of_dart);
    r.build_derived();
    return r;
}

RibbonStructure RibbonStructure::create_with_sigma1(SurfaceSignature sig,
                                                    int n_arcs,
                                                    const std::vector<int>& sigma1_explicit,
                                                    std::vector<int> sigma_inf,
                                                    std::vector<int> circle_of_dart) {
    const int nd = 2 * n_arcs;
    if (static_cast<int>(sigma1_explicit.size()) != nd || !is_bijection(sigma1_explicit)) {
        throw InvalidPermutation("sigma1 is not a bijection on the dart set");
    }
    for (int d = 0; d < nd; ++d) {
        if (sigma1_explicit[d] == d) {
            throw InvalidPermutation("sigma1 has a fixed point");
        }
        if (sigma1_explicit[d] != sigma1(d)) {
            throw InvalidPermutation("sigma1 must pair dart 2k with 2k+1");
        }
    }
    return create(sig, n_arcs, std::move(sigma_inf), std::move(circle_of_dart));
}

void RibbonStructure::build_derived() {
    const int nd = n_darts();
    sigma_inf_inv_ = invert(sigma_inf_);
    sigma0_.resize(nd);
    for (int d = 0; d < nd; ++d) sigma0_[d] = sigma1(sigma_inf_inv_[d]);

    // Every sigma_inf-orbit must carry one circle label, and distinct orbits
    // distinct labels: one orbit per boundary circle met by the system.
    std::vector<int> label_of_orbit;
    for (const auto& orbit : orbits_of(sigma_inf_)) {
        const int label = circle_of_[orbit.front()];
        for (int d : orbit) {
            if (circle_of_[d] != label) {
                throw CircleMismatch("sigma_inf-orbit spans two boundary labels");
            }
        }
        if (std::find(label_of_orbit.begin(), label_of_orbit.end(), label) != label_of_orbit.end()) {
            throw CircleMismatch("two sigma_inf-orbits share one boundary label");
        }
        label_of_orbit.push_back(label);
    }

    orbits0_ = orbits_of(sigma0_);
    orbit0_of_.assign(nd, -1);
    for (int i = 0; i < static_cast<int>(orbits0_.size()); ++i) {
        for (int d : orbits0_[i]) orbit0_of_[d] = i;
    }

    circle_darts_.assign(sig_.n_boundary, {});
    std::vector<char> seen(nd, 0);
    for (int d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        std::vector<int> cyc;
        for (int e = d; !seen[e]; e = sigma_inf_inv_[e]) {
            seen[e] = 1;
            cyc.push_back(e);
        }
        circle_darts_[circle_of_[d]] = std::move(cyc);
    }
}

ValidationReport RibbonStructure::validate() const {
    ValidationReport rep;
    rep.sigma0_orbits = static_cast<int>(orbits0_.size());
    rep.sigma1_orbits = n_arcs_;
    rep.sigma_inf_orbits = 0;
    for (const auto& c : circle_darts_) {
        if (!c.empty()) ++rep.sigma_inf_orbits;
    }
    // Connectivity under <sigma0, sigma1>.
    const int nd = n_darts();
    rep.connected = true;
    if (nd > 0) {
        std::vector<char> seen(nd, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            ++count;
            for (int e : {sigma0_[d], sigma1(d)}) {
                if (!seen[e]) {
                    seen[e] = 1;
                    stack.push_back(e);
                }
            }
        }
        rep.connected = (count == nd);
    }
    return rep;
}

bool RibbonStructure::is_maximal() const {
    if (n_arcs_ != 6 * sig_.genus - 6 + 3 * sig_.n_boundary) return false;
    for (const auto& orbit : orbits0_) {
        if (orbit.size() != 3) return false;
    }
    return true;
}

ComplementReport RibbonStructure::classify_complement() const {
    ComplementReport rep;
    for (const auto& orbit : orbits0_) {
        RegionDescriptor region;
        region.polygon_sides = 2 * static_cast<int>(orbit.size());
        region.darts = orbit;
        rep.regions.push_back(std::move(region));
    }
    rep.connected = validate().connected;
    rep.all_circles_met = true;
    for (const auto& c : circle_darts_) {
        if (c.empty()) rep.all_circles_met = false;
    }
    // The glued-up surface retracts onto the dual graph (vertices =
    // sigma0-orbits, edges = arcs); it matches the declared surface iff the
    // Euler characteristics agree.
    rep.euler_consistent =
        n_arcs_ > 0 && static_cast<int>(orbits0_.size()) - n_arcs_ == sig_.euler();
    rep.proper = rep.connected && rep.all_circles_met && rep.euler_consistent;
    return rep;
}

RibbonStructure RibbonStructure::relabeled(const std::vector<int>& arc_perm,
                                           const std::vector<bool>& flip_orientation) const {
    const int nd = n_darts();
    std::vector<int> dart_map(nd);
    for (int a = 0; a < n_arcs_; ++a) {
        const int base = 2 * arc_perm[a];
        dart_map[2 * a] = flip_orientation[a] ? base + 1 : base;
        dart_map[2 * a + 1] = flip_orientation[a] ? base : base + 1;
    }
    std::vector<int> new_inf(nd), new_circle(nd);
    for (int d = 0; d < nd; ++d) {
        new_inf[dart_map[d]] = dart_map[sigma_inf_[d]];
        new_circle[dart_map[d]] = circle_of_[d];
    }
    return create(sig_, n_arcs_, std::move(new_inf), std::move(new_circle));
}

std::pair<RibbonStructure, std::vector<int>> RibbonStructure::restricted(
    const std::vector<bool>& keep) const {
    std::vector<int> old_arc_of_new;
    std::vector<int> new_arc_of_old(n_arcs_, -1);
    for (int a = 0; a < n_arcs_; ++a) {
        if (keep[a]) {
            new_arc_of_old[a] = static_cast<int>(old_arc_of_new.size());
            old_arc_of_new.push_back(a);
        }
    }
    const int new_n = static_cast<int>(old_arc_of_new.size());
    std::vector<int> new_inf(2 * new_n), new_circle(2 * new_n);
    auto map_dart = [&](int d) { return 2 * new_arc_of_old[arc_of_dart(d)] + (d & 1); };
    for (int a = 0; a < n_arcs_; ++a) {
        if (!keep[a]) continue;
        for (int d : {2 * a, 2 * a + 1}) {
            // Walk successors past removed endpoints; the predecessor in the
            // reduced structure is the inverse of that chain.
            int e = sigma_inf_inv_[d];
            while (!keep[arc_of_dart(e)]) e = sigma_inf_inv_[e];
            new_inf[map_dart(e)] = map_dart(d);
            new_circle[map_dart(d)] = circle_of_[d];
        }
    }
    return {create(sig_, new_n, std::move(new_inf), std::move(new_circle)), old_arc_of_new};
}

RibbonStructure one_holed_torus_ribbon() {
    // Three arcs, one boundary circle; sigma0 = (0 2 4)(1 3 5).
    return RibbonStructure::create({1, 1}, 3, {5, 4, 1, 0, 3, 2}, {0, 0, 0, 0, 0, 0});
}

RibbonStructure pair_of_pants_ribbon() {
    // Three arcs joining the three boundary circles pairwise;
    // sigma0 = (0 2 4)(1 5 3).
    return RibbonStructure::create({0, 3}, 3, {3, 4, 5, 0, 1, 2}, {0, 1, 2, 0, 1, 2});
}

} // namespace arccoord
