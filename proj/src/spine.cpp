#include "arccoord/spine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace arccoord {

// -- hyperboloid primitives ---------------------------------------------------

long double minkowski_dot(const MVec& u, const MVec& v) {
    return u.x * v.x + u.y * v.y - u.t * v.t;
}

double geodesic_distance(const MVec& n1, const MVec& n2) {
    const long double c = std::fabs(minkowski_dot(n1, n2));
    return acosh1p(static_cast<double>(c - 1.0L));
}

double point_distance(const MVec& p, const MVec& q) {
    return acosh1p(static_cast<double>(-minkowski_dot(p, q) - 1.0L));
}

namespace {

MVec scale(const MVec& v, long double s) { return {v.t * s, v.x * s, v.y * s}; }

MVec axpy(const MVec& u, long double cu, const MVec& v, long double cv) {
    return {u.t * cu + v.t * cv, u.x * cu + v.x * cv, u.y * cu + v.y * cv};
}

long double max_abs_component(const MVec& v) {
    return std::max({std::fabs(v.t), std::fabs(v.x), std::fabs(v.y)});
}

} // namespace

Frame Frame::base() {
    return {{1.0L, 0.0L, 0.0L}, {0.0L, 1.0L, 0.0L}, {0.0L, 0.0L, 1.0L}};
}

Frame Frame::advanced(double length) const { return advanced_l(length); }

Frame Frame::advanced_l(long double length) const {
    const long double ch = std::cosh(length), sh = std::sinh(length);
    Frame f;
    f.pos = axpy(pos, ch, dir, sh);
    f.dir = axpy(pos, sh, dir, ch);
    f.normal = normal;
    return f;
}

Frame Frame::turned_left() const { return {pos, normal, scale(dir, -1.0L)}; }

void Frame::renormalize() {
    pos = scale(pos, 1.0L / std::sqrt(-minkowski_dot(pos, pos)));
    dir = axpy(dir, 1.0L, pos, minkowski_dot(dir, pos)); // project out the point
    dir = scale(dir, 1.0L / std::sqrt(minkowski_dot(dir, dir)));
    normal = axpy(normal, 1.0L, pos, minkowski_dot(normal, pos));
    normal = axpy(normal, 1.0L, dir, -minkowski_dot(normal, dir));
    normal = scale(normal, 1.0L / std::sqrt(minkowski_dot(normal, normal)));
}

RealizedHexagon realize_hexagon_sides(const std::array<long double, 6>& side_lengths,
                                      const Frame& start,
                                      double closure_tol) {
    RealizedHexagon out;
    Frame f = start;
    long double peak = 1.0L;
    for (int i = 0; i < 6; ++i) {
        out.side_normals[i] = f.normal;
        f = f.advanced_l(side_lengths[i]);
        out.corners[i] = f.pos;
        peak = std::max(peak, max_abs_component(f.pos));
        f = f.turned_left();
        f.renormalize();
    }
    // Component-wise frame mismatch, scaled by the largest intermediate
    // magnitude: the drift of the march is relative to what it cancelled.
    // (The metric distance formulae lose quadratically near coincidence and
    // would report sqrt(roundoff) here.)
    const long double pos_gap = std::max({std::fabs(f.pos.t - start.pos.t),
                                          std::fabs(f.pos.x - start.pos.x),
                                          std::fabs(f.pos.y - start.pos.y)});
    const long double dir_gap = std::max({std::fabs(f.dir.t - start.dir.t),
                                          std::fabs(f.dir.x - start.dir.x),
                                          std::fabs(f.dir.y - start.dir.y)});
    out.closure_error = static_cast<double>(std::max(pos_gap, dir_gap) / peak);
    if (!(out.closure_error < closure_tol)) {
        std::ostringstream msg;
        msg << "realize_hexagon: frame failed to close (error " << out.closure_error << ")";
        throw NumericalClosureFailure(msg.str());
    }
    return out;
}

namespace {

// Segment lengths of the hexagon with arc sides (a, b, c) at long-double
// precision; the flip feeds them straight into the march so that the sides
// are mutually consistent beyond double rounding.
std::array<long double, 3> segments_l(long double a, long double b, long double c) {
    auto seg = [](long double opp, long double x, long double y) {
        const long double u = (std::cosh(x - y) + std::cosh(opp)) / (std::sinh(x) * std::sinh(y));
        return std::log1p(u + std::sqrt(u * (u + 2.0L)));
    };
    return {seg(c, a, b), seg(a, b, c), seg(b, c, a)};
}

} // namespace

RealizedHexagon realize_hexagon(const HexTriple& hex, double closure_tol) {
    const auto seg = segments_l(hex.a_i, hex.a_j, hex.a_k);
    return realize_hexagon_sides(
        std::array<long double, 6>{hex.a_i, seg[0], hex.a_j, seg[1], hex.a_k, seg[2]},
        Frame::base(), closure_tol);
}

// -- flip ---------------------------------------------------------------------

FlipResult flip(const MaximalCoordinates& m, int arc, double closure_tol) {
    const RibbonStructure& r = m.ribbon;
    const int fwd = 2 * arc;      // dart ending at y_alpha
    const int bwd = 2 * arc + 1;
    if (r.sigma0_orbit_of(fwd) == r.sigma0_orbit_of(bwd)) {
        throw NonFlippable("flip: both sides of the arc lie on one hexagon");
    }

    // Hexagon 1 = (fwd, B, G), hexagon 2 = (bwd, D, E) in sigma0 order.
    const int B = r.sigma0(fwd), G = r.sigma0(B);
    const int D = r.sigma0(bwd), E = r.sigma0(D);
    const double a = m.a[arc];
    const double b = m.a[arc_of_dart(B)], c = m.a[arc_of_dart(G)];
    const double d = m.a[arc_of_dart(D)], e = m.a[arc_of_dart(E)];

    const auto seg1 = segments_l(a, b, c); // (after fwd, after B, after G)
    const auto seg2 = segments_l(a, d, e); // (after bwd, after D, after E)

    // Realize both hexagons glued along the old arc, on opposite sides of
    // the base geodesic, and take the distance between the geodesics that
    // carry the segments after B and after D: that common perpendicular is
    // the new arc.
    const Frame f1 = Frame::base();
    const auto hex1 = realize_hexagon_sides(
        std::array<long double, 6>{a, seg1[0], b, seg1[1], c, seg1[2]}, f1, closure_tol);

    Frame f2;
    {
        const Frame at_end = f1.advanced(a);
        f2.pos = at_end.pos;
        f2.dir = scale(at_end.dir, -1.0L);
        f2.normal = scale(at_end.normal, -1.0L);
    }
    const auto hex2 = realize_hexagon_sides(
        std::array<long double, 6>{a, seg2[0], d, seg2[1], e, seg2[2]}, f2, closure_tol);

    const long double dot = minkowski_dot(hex1.side_normals[3], hex2.side_normals[3]);
    if (std::fabs(dot) < 1.0L - 1e-12L) {
        throw NumericalClosureFailure("flip: opposite boundary geodesics are not disjoint");
    }
    const double new_length = geodesic_distance(hex1.side_normals[3], hex2.side_normals[3]);
    if (!(new_length > 0.0) || !std::isfinite(new_length)) {
        throw NumericalClosureFailure("flip: degenerate new arc length");
    }

    // Rewire sigma_inf through the successor chains. New darts U = fwd
    // (ends on the old segment after B) and V = bwd (after D).
    const int U = fwd, V = bwd;
    std::vector<int> succ(r.n_darts());
    for (int dart = 0; dart < r.n_darts(); ++dart) succ[dart] = r.next_on_circle(dart);
    succ[B] = U;
    succ[U] = sigma1(G);
    succ[G] = sigma1(D);
    succ[D] = V;
    succ[V] = sigma1(E);
    succ[E] = sigma1(B);

    std::vector<int> new_inf(r.n_darts());
    for (int dart = 0; dart < r.n_darts(); ++dart) new_inf[succ[dart]] = dart;
    std::vector<int> new_circle = r.circle_of();
    new_circle[U] = r.circle_of(B);
    new_circle[V] = r.circle_of(D);

    FlipResult out{
        MaximalCoordinates::create(
            RibbonStructure::create(r.signature(), r.n_arcs(), std::move(new_inf),
                                    std::move(new_circle)),
            m.a),
        {arc, r.sigma0_orbit_of(fwd), r.sigma0_orbit_of(bwd), a, new_length}};
    out.coords.a[arc] = new_length;
    return out;
}

// -- find_spine ---------------------------------------------------------------

SpineResult find_spine(const MaximalCoordinates& m, const SpineOptions& opts) {
    const int n = m.ribbon.n_arcs();
    const int cap = opts.max_flips > 0 ? opts.max_flips : 10 * n * n;

    MaximalCoordinates cur = m;
    std::vector<FlipMove> trace;
    Widths w = all_widths(cur);
    for (;;) {
        // Most negative width first, ties to the lowest index. Such an arc
        // is always flippable: an arc bounding one hexagon on both sides
        // has width numerator s_x^2 > 0 on both darts.
        int worst = -1;
        double worst_w = -opts.zero_tol;
        for (int arc = 0; arc < n; ++arc) {
            if (w.per_arc[arc] < worst_w) {
                worst_w = w.per_arc[arc];
                worst = arc;
            }
        }
        if (worst < 0) break;
        if (static_cast<int>(trace.size()) >= cap) {
            throw FlipLimitExceeded("find_spine: flip cap reached, suspected cycling");
        }
        FlipResult res = flip(cur, worst, opts.closure_tol);
        cur = std::move(res.coords);
        trace.push_back(res.move);
        w = all_widths(cur);
    }

    std::vector<double> final_weights = w.per_arc;
    std::vector<int> zero_arcs;
    std::vector<bool> keep(n, false);
    for (int arc = 0; arc < n; ++arc) {
        if (w.per_arc[arc] > opts.zero_tol) {
            keep[arc] = true;
        } else {
            final_weights[arc] = 0.0;
            zero_arcs.push_back(arc);
        }
    }
    auto [support, old_arcs] = cur.ribbon.restricted(keep);
    std::vector<double> support_weights(old_arcs.size());
    for (size_t i = 0; i < old_arcs.size(); ++i) support_weights[i] = w.per_arc[old_arcs[i]];
    const double total = BoundaryLayout::create(cur).total_boundary;

    return SpineResult{
        WeightedArcSystem{std::move(support), std::move(support_weights), total},
        std::move(old_arcs),
        std::move(zero_arcs),
        std::move(cur),
        std::move(final_weights),
        std::move(trace)};
}

// -- solve_widths -------------------------------------------------------------

namespace {

// Gaussian elimination with partial pivoting; A is n x n row-major.
std::vector<double> solve_linear(std::vector<double> A, std::vector<double> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::fabs(A[row * n + col]) > std::fabs(A[pivot * n + col])) pivot = row;
        }
        if (std::fabs(A[pivot * n + col]) < 1e-300) {
            throw SingularJacobian("solve_linear: singular matrix");
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(A[col * n + j], A[pivot * n + j]);
            std::swap(rhs[col], rhs[pivot]);
        }
        const double inv = 1.0 / A[col * n + col];
        for (int row = col + 1; row < n; ++row) {
            const double f = A[row * n + col] * inv;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) A[row * n + j] -= f * A[col * n + j];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (int row = n - 1; row >= 0; --row) {
        double s = rhs[row];
        for (int j = row + 1; j < n; ++j) s -= A[row * n + j] * x[j];
        x[row] = s / A[row * n + row];
    }
    return x;
}

std::vector<double> widths_at(const RibbonStructure& r, const std::vector<double>& a) {
    return all_widths(MaximalCoordinates::create(r, a)).per_arc;
}

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

} // namespace

SolveReport solve_widths(const RibbonStructure& completion,
                         const std::vector<double>& target_widths,
                         const SolveOptions& opts) {
    const int n = completion.n_arcs();
    if (!completion.is_maximal()) {
        throw InvalidTarget("solve_widths: completion must be a maximal system");
    }
    if (static_cast<int>(target_widths.size()) != n) {
        throw InvalidTarget("solve_widths: need one target width per arc");
    }
    double max_pos = 0.0;
    std::vector<bool> support(n, false);
    for (int arc = 0; arc < n; ++arc) {
        const double w = target_widths[arc];
        if (w < 0.0 || !std::isfinite(w)) {
            throw InvalidTarget("solve_widths: target widths must be >= 0");
        }
        support[arc] = w > 0.0;
        max_pos = std::max(max_pos, w);
    }
    if (max_pos == 0.0) {
        throw InvalidTarget("solve_widths: all targets are zero");
    }
    {
        auto [sub, ignored] = completion.restricted(support);
        (void)ignored;
        if (!sub.classify_complement().proper) {
            throw InvalidTarget("solve_widths: positive support does not quasi-fill");
        }
    }

    // Start from the near-degenerate relation w ~ t/2; zero-target arcs get
    // the same seed as the smallest positive target, which keeps them in a
    // comparable length range.
    double min_pos = max_pos;
    for (int arc = 0; arc < n; ++arc) {
        if (support[arc]) min_pos = std::min(min_pos, target_widths[arc]);
    }
    std::vector<double> a(n);
    if (opts.initial) {
        a = *opts.initial;
        if (static_cast<int>(a.size()) != n) {
            throw InvalidTarget("solve_widths: warm start has wrong size");
        }
    } else {
        for (int arc = 0; arc < n; ++arc) {
            const double w = support[arc] ? target_widths[arc] : 0.5 * min_pos;
            a[arc] = t_length(2.0 * w);
        }
    }

    auto residual = [&](const std::vector<double>& lengths) {
        std::vector<double> f = widths_at(completion, lengths);
        for (int arc = 0; arc < n; ++arc) f[arc] -= target_widths[arc];
        return f;
    };

    std::vector<double> f = residual(a);
    double fn = sup_norm(f);
    std::vector<double> best_a = a;
    double best_fn = fn;
    int iter = 0;
    for (; iter < opts.max_iterations && fn > opts.tol; ++iter) {
        // Central finite-difference Jacobian J[i][j] = dw_i / da_j.
        std::vector<double> J(static_cast<size_t>(n) * n);
        std::vector<double> probe = a;
        for (int j = 0; j < n; ++j) {
            const double h = opts.fd_step * a[j];
            probe[j] = a[j] + h;
            const std::vector<double> wp = widths_at(completion, probe);
            probe[j] = a[j] - h;
            const std::vector<double> wm = widths_at(completion, probe);
            probe[j] = a[j];
            const double inv2h = 1.0 / (2.0 * h);
            for (int i = 0; i < n; ++i) J[i * n + j] = (wp[i] - wm[i]) * inv2h;
        }
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = -f[i];
        std::vector<double> step = solve_linear(std::move(J), std::move(rhs));

        double lambda = 1.0;
        for (int i = 0; i < n; ++i) {
            // Keep lengths strictly positive along the line search.
            while (a[i] + lambda * step[i] <= 0.0) lambda *= 0.5;
        }
        bool improved = false;
        for (int h = 0; h <= opts.max_halvings; ++h) {
            std::vector<double> trial(n);
            for (int i = 0; i < n; ++i) trial[i] = a[i] + lambda * step[i];
            std::vector<double> ft = residual(trial);
            const double ftn = sup_norm(ft);
            if (ftn < fn) {
                a = std::move(trial);
                f = std::move(ft);
                fn = ftn;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (fn < best_fn) {
            best_fn = fn;
            best_a = a;
        }
        if (!improved) break;
    }
    if (fn > opts.tol) {
        std::ostringstream msg;
        msg << "solve_widths: no convergence after " << iter << " iterations (residual " << best_fn
            << ")";
        throw NoConvergence(msg.str(), best_a, best_fn);
    }
    return {a, fn, iter};
}

} // namespace arccoord
