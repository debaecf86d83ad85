#include "arccoord/strebel.hpp"

#include <cmath>
#include <sstream>

namespace arccoord {

WeightedRibbonGraph WeightedRibbonGraph::create(const RibbonStructure& ribbon,
                                                std::vector<double> weights) {
    if (static_cast<int>(weights.size()) != ribbon.n_arcs()) {
        throw ImproperSystem("WeightedRibbonGraph: need one weight per arc");
    }
    std::vector<bool> keep(weights.size(), false);
    bool all_positive = true;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
            throw ImproperSystem("WeightedRibbonGraph: weights must be finite and >= 0");
        }
        keep[i] = weights[i] > 0.0;
        all_positive = all_positive && keep[i];
    }
    if (all_positive) {
        if (!ribbon.classify_complement().proper) {
            throw ImproperSystem("WeightedRibbonGraph: system does not quasi-fill");
        }
        return {ribbon, std::move(weights)};
    }
    auto [reduced, old_arcs] = ribbon.restricted(keep);
    if (!reduced.classify_complement().proper) {
        throw ImproperSystem("WeightedRibbonGraph: positive support does not quasi-fill");
    }
    std::vector<double> kept_weights(old_arcs.size());
    for (size_t i = 0; i < old_arcs.size(); ++i) kept_weights[i] = weights[old_arcs[i]];
    return {std::move(reduced), std::move(kept_weights)};
}

FlatTileComplex build_flat_surface(const WeightedRibbonGraph& g) {
    FlatTileComplex c{g, {}, {}, g.ribbon.signature().genus};
    for (const auto& orbit : g.ribbon.sigma0_orbits()) {
        c.vertices.push_back({orbit, static_cast<int>(orbit.size())});
    }
    for (int k = 0; k < g.ribbon.signature().n_boundary; ++k) {
        const auto& darts = g.ribbon.circle_darts(k);
        if (darts.empty()) {
            throw ImproperSystem("build_flat_surface: boundary circle met by no arc");
        }
        CylinderData cyl;
        cyl.circle = k;
        cyl.boundary_word = darts;
        for (int d : darts) cyl.circumference += g.weights[arc_of_dart(d)];
        c.cylinders.push_back(std::move(cyl));
    }
    return c;
}

std::vector<int> zero_orders(const FlatTileComplex& c) {
    std::vector<int> orders(c.vertices.size());
    for (size_t i = 0; i < c.vertices.size(); ++i) orders[i] = c.vertices[i].valence - 2;
    return orders;
}

DivisorCheck divisor_check(const FlatTileComplex& c) {
    DivisorCheck out;
    for (const auto& v : c.vertices) out.zero_order_sum += v.valence - 2;
    out.n_double_poles = static_cast<int>(c.cylinders.size());
    out.expected_4g_minus_4 = 4 * c.genus - 4;
    out.consistent = (out.zero_order_sum - 2 * out.n_double_poles == out.expected_4g_minus_4);
    return out;
}

std::vector<double> quadratic_residues(const FlatTileComplex& c) {
    std::vector<double> res(c.cylinders.size());
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (size_t i = 0; i < c.cylinders.size(); ++i) {
        const double q = c.cylinders[i].circumference / two_pi;
        res[i] = -q * q;
    }
    return res;
}

std::vector<std::vector<int>> horizontal_loops(const FlatTileComplex& c) {
    // At any height y > 0 the level set meets each tile in one horizontal
    // segment; the side gluings chain segments along next_on_circle.
    std::vector<std::vector<int>> loops;
    std::vector<char> seen(c.graph.ribbon.n_darts(), 0);
    for (int d = 0; d < c.graph.ribbon.n_darts(); ++d) {
        if (seen[d]) continue;
        std::vector<int> loop;
        for (int e = d; !seen[e]; e = c.graph.ribbon.next_on_circle(e)) {
            seen[e] = 1;
            loop.push_back(e);
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

std::string render_svg(const FlatTileComplex& c, double truncation_height) {
    if (!(truncation_height > 0.0)) {
        throw NonPositiveLength("render_svg: truncation height must be > 0");
    }
    const double unit = 40.0;   // px per flat unit
    const double pad = 18.0;
    const double row_gap = 34.0;

    std::ostringstream svg;
    double y_cursor = pad;
    double max_width = 0.0;

    std::ostringstream body;
    body.setf(std::ios::fixed);
    body.precision(2);
    // One row of tiles per cylinder, in the order the boundary word chains
    // them; shared vertical edges are the side gluings.
    for (const auto& cyl : c.cylinders) {
        double x_cursor = pad;
        const double tile_h = truncation_height * unit;
        for (int d : cyl.boundary_word) {
            const double w = c.graph.weights[arc_of_dart(d)] * unit;
            body << "  <rect x=\"" << x_cursor << "\" y=\"" << y_cursor << "\" width=\"" << w
                 << "\" height=\"" << tile_h << "\" fill=\"#dfe8f5\" stroke=\"#555\"/>\n";
            // critical-graph edge at the bottom of the tile
            body << "  <line x1=\"" << x_cursor << "\" y1=\"" << (y_cursor + tile_h) << "\" x2=\""
                 << (x_cursor + w) << "\" y2=\"" << (y_cursor + tile_h)
                 << "\" stroke=\"#b22\" stroke-width=\"2.5\"/>\n";
            body << "  <text x=\"" << (x_cursor + 0.5 * w) << "\" y=\""
                 << (y_cursor + 0.55 * tile_h) << "\" font-size=\"11\" text-anchor=\"middle\">d"
                 << d << "</text>\n";
            // bottom-edge pairing label: this tile glues to the reversed tile
            body << "  <text x=\"" << (x_cursor + 0.5 * w) << "\" y=\""
                 << (y_cursor + tile_h + 12.0) << "\" font-size=\"9\" text-anchor=\"middle\">~d"
                 << sigma1(d) << "</text>\n";
            x_cursor += w;
        }
        body << "  <text x=\"" << pad << "\" y=\"" << (y_cursor - 4.0)
             << "\" font-size=\"10\">cylinder " << cyl.circle << " (p=" << cyl.circumference
             << ")</text>\n";
        max_width = std::max(max_width, x_cursor + pad);
        y_cursor += tile_h + row_gap;
    }

    svg.setf(std::ios::fixed);
    svg.precision(2);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << max_width << "\" height=\""
        << y_cursor << "\" viewBox=\"0 0 " << max_width << " " << y_cursor << "\">\n";
    svg << body.str();
    svg << "</svg>\n";
    return svg.str();
}

namespace {

long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw NonPositiveLength("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = gcd_ll(num == 0 ? den : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

std::vector<Rational> exact_circumferences(const RibbonStructure& ribbon,
                                           const std::vector<Rational>& weights) {
    std::vector<Rational> out;
    for (int k = 0; k < ribbon.signature().n_boundary; ++k) {
        Rational sum(0, 1);
        for (int d : ribbon.circle_darts(k)) sum = sum + weights[arc_of_dart(d)];
        out.push_back(sum);
    }
    return out;
}

} // namespace arccoord
