#include "arccoord/surface.hpp"

#include <cmath>

namespace arccoord {

MaximalCoordinates MaximalCoordinates::create(RibbonStructure ribbon, std::vector<double> a_lengths) {
    if (!ribbon.is_maximal()) {
        throw ImproperSystem("MaximalCoordinates: ribbon structure is not maximal");
    }
    if (static_cast<int>(a_lengths.size()) != ribbon.n_arcs()) {
        throw NonPositiveLength("MaximalCoordinates: need one a-length per arc");
    }
    for (double v : a_lengths) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw NonPositiveLength("MaximalCoordinates: a-lengths must be finite and > 0");
        }
    }
    return {std::move(ribbon), std::move(a_lengths)};
}

namespace {

// The sigma0-orbit of a dart as a HexTriple (this dart first).
HexTriple hex_of_dart(const MaximalCoordinates& m, int dart) {
    const int v = m.ribbon.sigma0(dart);
    const int x = m.ribbon.sigma0(v);
    return {m.a[arc_of_dart(dart)], m.a[arc_of_dart(v)], m.a[arc_of_dart(x)]};
}

} // namespace

double gap_after_dart(const MaximalCoordinates& m, int dart) {
    // The gap between the endpoints of `dart` and its successor is the
    // hexagon side between arc sides dart and sigma0(dart), opposite the
    // third side of the orbit.
    const HexTriple h = hex_of_dart(m, dart);
    return hexagon_boundary_segment(h.a_k, h.a_i, h.a_j);
}

double dart_width(const MaximalCoordinates& m, int dart) {
    return oriented_width_direct(hex_of_dart(m, dart), HexSide::i);
}

Widths all_widths(const MaximalCoordinates& m) {
    Widths w;
    const int nd = m.ribbon.n_darts();
    w.per_dart.resize(nd);
    for (int d = 0; d < nd; ++d) w.per_dart[d] = dart_width(m, d);
    w.per_arc.resize(m.ribbon.n_arcs());
    for (int a = 0; a < m.ribbon.n_arcs(); ++a) {
        w.per_arc[a] = w.per_dart[2 * a] + w.per_dart[2 * a + 1];
    }
    return w;
}

std::vector<double> t_lengths(const MaximalCoordinates& m) {
    std::vector<double> t(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) t[i] = t_length(m.a[i]);
    return t;
}

BoundaryLayout BoundaryLayout::create(const MaximalCoordinates& m, double check_tol) {
    BoundaryLayout layout;
    const auto& ribbon = m.ribbon;
    layout.circles.resize(ribbon.signature().n_boundary);
    layout.position_index.assign(ribbon.n_darts(), -1);
    layout.gap_by_dart.assign(ribbon.n_darts(), 0.0);
    for (int k = 0; k < ribbon.signature().n_boundary; ++k) {
        CircleLayout& c = layout.circles[k];
        c.darts = ribbon.circle_darts(k);
        c.gaps.resize(c.darts.size());
        for (size_t i = 0; i < c.darts.size(); ++i) {
            layout.position_index[c.darts[i]] = static_cast<int>(i);
            c.gaps[i] = gap_after_dart(m, c.darts[i]);
            layout.gap_by_dart[c.darts[i]] = c.gaps[i];
            c.circumference += c.gaps[i];
        }
        layout.total_boundary += c.circumference;
    }
    // Convention self-check: the width of every dart computed from the
    // hexagon formula must match the segment combination
    //   w(d) = (gap(d) + gap(sigma0^2 d) - gap(sigma0 d)) / 2.
    for (int d = 0; d < ribbon.n_darts(); ++d) {
        const int v = ribbon.sigma0(d);
        const int x = ribbon.sigma0(v);
        const double via_seg = oriented_width_from_segments(
            layout.gap_after(d), layout.gap_after(x), layout.gap_after(v));
        if (std::fabs(via_seg - dart_width(m, d)) > check_tol) {
            throw ConventionMismatch("BoundaryLayout: two-way width cross-check failed");
        }
    }
    return layout;
}

std::vector<double> circumferences(const MaximalCoordinates& m) {
    auto layout = BoundaryLayout::create(m);
    std::vector<double> p(layout.circles.size());
    for (size_t k = 0; k < layout.circles.size(); ++k) p[k] = layout.circles[k].circumference;
    return p;
}

double boundary_distance(const BoundaryLayout& layout,
                         const RibbonStructure& ribbon,
                         int dart_i,
                         int dart_j) {
    const int k = ribbon.circle_of(dart_i);
    if (k != ribbon.circle_of(dart_j)) {
        throw DifferentCircles("boundary_distance: darts end on different circles");
    }
    const CircleLayout& c = layout.circles[k];
    const int n = static_cast<int>(c.darts.size());
    int pi = layout.position_of(dart_i);
    int pj = layout.position_of(dart_j);
    double d = 0.0;
    for (int p = pi; p != pj; p = (p + 1) % n) d += c.gaps[p];
    return d;
}

DecoratedStructure lambda_lengths(const MaximalCoordinates& m) {
    const auto p = circumferences(m);
    double total = 0.0;
    for (double v : p) total += v;
    if (total > 1.0) {
        throw BoundaryTooLong("lambda_lengths: total boundary length exceeds 1");
    }
    const double theta = std::asin(total);
    const double factor = std::tan(0.5 * theta);
    DecoratedStructure d{m.ribbon, {}, {}};
    d.lambda.resize(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) {
        d.lambda[i] = factor * std::exp(0.5 * m.a[i]);
    }
    d.p_weights.resize(p.size());
    for (size_t k = 0; k < p.size(); ++k) d.p_weights[k] = p[k] / total;
    return d;
}

SimplicialCoordinates simplicial_coordinates(const DecoratedStructure& d) {
    SimplicialCoordinates x;
    const int nd = d.ribbon.n_darts();
    x.per_dart.resize(nd);
    for (int u = 0; u < nd; ++u) {
        const int v = d.ribbon.sigma0(u);
        const int w = d.ribbon.sigma0(v);
        const double la = d.lambda[arc_of_dart(u)];
        const double li = d.lambda[arc_of_dart(v)];
        const double lj = d.lambda[arc_of_dart(w)];
        x.per_dart[u] = (li * li + lj * lj - la * la) / (li * lj * la);
    }
    x.per_arc.resize(d.ribbon.n_arcs());
    for (int a = 0; a < d.ribbon.n_arcs(); ++a) {
        x.per_arc[a] = x.per_dart[2 * a] + x.per_dart[2 * a + 1];
    }
    return x;
}

} // namespace arccoord
