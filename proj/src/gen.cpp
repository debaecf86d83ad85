#include "arccoord/gen.hpp"

#include <algorithm>
#include <numeric>

namespace arccoord {

namespace {

// sigma_inf = sigma0^{-1} * sigma1 from a candidate sigma0; returns the
// structure when the glued surface is connected, plus its boundary count.
struct Glued {
    std::vector<int> sigma_inf;
    std::vector<int> circle_of;
    int n_circles = 0;
    bool connected = false;
};

Glued glue(const std::vector<int>& sigma0) {
    const int nd = static_cast<int>(sigma0.size());
    std::vector<int> sigma0_inv(nd);
    for (int d = 0; d < nd; ++d) sigma0_inv[sigma0[d]] = d;

    Glued g;
    g.sigma_inf.resize(nd);
    for (int d = 0; d < nd; ++d) g.sigma_inf[d] = sigma0_inv[sigma1(d)];

    g.circle_of.assign(nd, -1);
    for (int d = 0; d < nd; ++d) {
        if (g.circle_of[d] >= 0) continue;
        for (int e = d; g.circle_of[e] < 0; e = g.sigma_inf[e]) g.circle_of[e] = g.n_circles;
        ++g.n_circles;
    }

    std::vector<char> seen(nd, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        ++count;
        for (int e : {sigma0[d], sigma1(d)}) {
            if (!seen[e]) {
                seen[e] = 1;
                stack.push_back(e);
            }
        }
    }
    g.connected = (count == nd);
    return g;
}

std::vector<int> random_cycle_permutation(int n_darts, const std::vector<int>& cycle_sizes,
                                          Rng& rng) {
    std::vector<int> darts(n_darts);
    std::iota(darts.begin(), darts.end(), 0);
    std::shuffle(darts.begin(), darts.end(), rng);
    std::vector<int> sigma0(n_darts);
    int at = 0;
    for (int size : cycle_sizes) {
        for (int i = 0; i < size; ++i) {
            sigma0[darts[at + i]] = darts[at + (i + 1) % size];
        }
        at += size;
    }
    return sigma0;
}

} // namespace

RibbonStructure random_maximal_ribbon(SurfaceSignature sig, Rng& rng) {
    const int n_arcs = 6 * sig.genus - 6 + 3 * sig.n_boundary;
    if (n_arcs <= 0) throw InvalidPermutation("random_maximal_ribbon: chi(S) must be negative");
    const int nd = 2 * n_arcs;
    const std::vector<int> sizes(nd / 3, 3);
    for (;;) {
        const auto sigma0 = random_cycle_permutation(nd, sizes, rng);
        const Glued g = glue(sigma0);
        if (!g.connected || g.n_circles != sig.n_boundary) continue;
        return RibbonStructure::create(sig, n_arcs, g.sigma_inf, g.circle_of);
    }
}

RibbonStructure random_proper_ribbon(int n_arcs, Rng& rng) {
    const int nd = 2 * n_arcs;
    if (nd < 3) throw InvalidPermutation("random_proper_ribbon: need at least 2 arcs");
    for (;;) {
        // Partition the darts into vertex cycles of size 3..5.
        std::vector<int> sizes;
        int left = nd;
        std::uniform_int_distribution<int> pick(3, 5);
        while (left > 0) {
            int s = std::min(left, pick(rng));
            if (left - s != 0 && left - s < 3) s = left; // avoid a stranded remainder
            sizes.push_back(s);
            left -= s;
        }
        const auto sigma0 = random_cycle_permutation(nd, sizes, rng);
        const Glued g = glue(sigma0);
        if (!g.connected) continue;
        const int chi = static_cast<int>(sizes.size()) - n_arcs;
        const int twog = 2 - g.n_circles - chi;
        if (twog < 0 || twog % 2 != 0) continue;
        SurfaceSignature sig{twog / 2, g.n_circles};
        if (sig.euler() >= 0) continue;
        return RibbonStructure::create(sig, n_arcs, g.sigma_inf, g.circle_of);
    }
}

std::vector<double> random_lengths(int n, double lo, double hi, Rng& rng) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(n);
    for (double& v : out) v = dist(rng);
    return out;
}

} // namespace arccoord
