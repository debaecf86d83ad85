#include "arccoord/wp.hpp"

#include <cmath>

namespace arccoord {

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double SquareMatrix::antisymmetry_defect() const {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m = std::max(m, std::fabs(at(i, j) + at(j, i)));
    }
    return m;
}

SquareMatrix congruence(const SquareMatrix& M, const SquareMatrix& J) {
    const int n = M.n;
    SquareMatrix tmp = SquareMatrix::zero(n); // J * M
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double jik = J.at(i, k);
            if (jik == 0.0) continue;
            for (int j = 0; j < n; ++j) tmp.at(i, j) += jik * M.at(k, j);
        }
    }
    SquareMatrix out = SquareMatrix::zero(n); // (J*M) * J^T
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double t = tmp.at(i, k);
            if (t == 0.0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += t * J.at(j, k);
        }
    }
    return out;
}

PoissonBivector poisson_from_endpoints(int n_arcs, const std::vector<CircleEndpoints>& circles) {
    SquareMatrix M = SquareMatrix::zero(n_arcs);
    for (const auto& c : circles) {
        const double half = 0.5 * c.circumference;
        const size_t m = c.endpoints.size();
        for (size_t u = 0; u < m; ++u) {
            for (size_t v = 0; v < m; ++v) {
                if (u == v) continue; // a self-pair contributes to da/\da = 0
                double dist = c.endpoints[v].second - c.endpoints[u].second;
                if (dist < 0.0) dist += c.circumference;
                const double kernel = 0.25 * sinh_ratio(half - dist, half);
                const int ai = c.endpoints[u].first;
                const int aj = c.endpoints[v].first;
                M.at(ai, aj) += kernel;
                M.at(aj, ai) -= kernel;
            }
        }
    }
    return {std::move(M)};
}

PoissonBivector poisson_bivector(const MaximalCoordinates& m) {
    const auto layout = BoundaryLayout::create(m);
    std::vector<CircleEndpoints> circles;
    circles.reserve(layout.circles.size());
    for (const auto& c : layout.circles) {
        CircleEndpoints ce;
        ce.circumference = c.circumference;
        double pos = 0.0;
        for (size_t i = 0; i < c.darts.size(); ++i) {
            ce.endpoints.emplace_back(arc_of_dart(c.darts[i]), pos);
            pos += c.gaps[i];
        }
        circles.push_back(std::move(ce));
    }
    return poisson_from_endpoints(m.ribbon.n_arcs(), circles);
}

std::vector<double> boundary_length_gradient(const MaximalCoordinates& m, int circle,
                                             double h_scale) {
    const int n = m.ribbon.n_arcs();
    std::vector<double> grad(n);
    MaximalCoordinates probe = m;
    for (int i = 0; i < n; ++i) {
        const double h = h_scale * std::max(1.0, m.a[i]);
        probe.a[i] = m.a[i] + h;
        const double up = circumferences(probe)[circle];
        probe.a[i] = m.a[i] - h;
        const double dn = circumferences(probe)[circle];
        probe.a[i] = m.a[i];
        grad[i] = (up - dn) / (2.0 * h);
    }
    return grad;
}

double casimir_residual(const MaximalCoordinates& m, int circle, double h_scale) {
    const auto grad = boundary_length_gradient(m, circle, h_scale);
    const auto eta = poisson_bivector(m);
    const int n = m.ribbon.n_arcs();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += eta.coeffs.at(i, j) * grad[j];
        worst = std::max(worst, std::fabs(s));
    }
    return worst;
}

KontsevichBivector kontsevich_bivector(const RibbonStructure& graph) {
    SquareMatrix M = SquareMatrix::zero(graph.n_arcs());
    for (const auto& orbit : graph.sigma0_orbits()) {
        if (orbit.size() != 3) {
            throw NotTrivalent("kontsevich_bivector: graph has a vertex of valence != 3");
        }
        const int r1 = arc_of_dart(orbit[0]);
        const int r2 = arc_of_dart(orbit[1]);
        const int r3 = arc_of_dart(orbit[2]);
        for (auto [x, y] : {std::pair{r1, r2}, {r2, r3}, {r3, r1}}) {
            M.at(x, y) += 0.5;
            M.at(y, x) -= 0.5;
        }
    }
    return {std::move(M)};
}

NormalizedBivector normalized_bivector(const MaximalCoordinates& m, double fd_step) {
    const int n = m.ribbon.n_arcs();
    const PoissonBivector eta = poisson_bivector(m);

    auto normalized_widths = [&](const MaximalCoordinates& coords) {
        const auto w = all_widths(coords).per_arc;
        double total = 0.0;
        for (double x : w) total += x;
        // Sum of arc widths is L/2, so dividing by the sum is the (L/2)^{-1}
        // normalization.
        std::vector<double> out(w.size());
        for (size_t i = 0; i < w.size(); ++i) out[i] = w[i] / total;
        return out;
    };

    SquareMatrix K = SquareMatrix::zero(n);
    MaximalCoordinates probe = m;
    for (int j = 0; j < n; ++j) {
        const double h = fd_step * m.a[j];
        probe.a[j] = m.a[j] + h;
        const auto up = normalized_widths(probe);
        probe.a[j] = m.a[j] - h;
        const auto dn = normalized_widths(probe);
        probe.a[j] = m.a[j];
        for (int i = 0; i < n; ++i) {
            const double der = (up[i] - dn[i]) / (2.0 * h);
            if (!std::isfinite(der)) {
                throw SingularJacobian("normalized_bivector: non-finite width Jacobian");
            }
            K.at(i, j) = der;
        }
    }

    const double total = BoundaryLayout::create(m).total_boundary;
    const double scale = (1.0 + 0.5 * total) * (1.0 + 0.5 * total);
    SquareMatrix out = congruence(eta.coeffs, K);
    for (double& x : out.v) x *= scale;
    return {std::move(out), total};
}

PennerForm penner_form(const DecoratedStructure& d) {
    SquareMatrix M = SquareMatrix::zero(d.ribbon.n_arcs());
    for (const auto& orbit : d.ribbon.sigma0_orbits()) {
        if (orbit.size() != 3) {
            throw NotTrivalent("penner_form: decorated structure is not triangulated");
        }
        const int t1 = arc_of_dart(orbit[0]);
        const int t2 = arc_of_dart(orbit[1]);
        const int t3 = arc_of_dart(orbit[2]);
        for (auto [x, y] : {std::pair{t1, t2}, {t2, t3}, {t3, t1}}) {
            M.at(x, y) -= 0.5;
            M.at(y, x) += 0.5;
        }
    }
    return {std::move(M)};
}

} // namespace arccoord
