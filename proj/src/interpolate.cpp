#include "arccoord/interpolate.hpp"

#include <cmath>
#include <future>

namespace arccoord {

namespace {

ScaleRecord solve_one_scale(const RibbonStructure& ribbon,
                            const std::vector<double>& projective_weights,
                            const KontsevichBivector& H,
                            double total,
                            const SolveOptions& solve_opts,
                            double fd_step) {
    const int n = ribbon.n_arcs();
    ScaleRecord rec;
    rec.target_total = total;
    if (!(total > 0.0)) {
        rec.error = "non-positive total boundary length";
        return rec;
    }

    std::vector<double> target(n);
    for (int i = 0; i < n; ++i) target[i] = projective_weights[i] * 0.5 * total;

    try {
        SolveReport rep = solve_widths(ribbon, target, solve_opts);
        rec.solved = true;
        rec.a = std::move(rep.a);
    } catch (const NoConvergence& e) {
        rec.error = e.what();
        return rec;
    }

    const MaximalCoordinates m = MaximalCoordinates::create(ribbon, rec.a);
    rec.t = t_lengths(m);
    const Widths w = all_widths(m);
    rec.w_arc = w.per_arc;
    rec.w_dart = w.per_dart;
    rec.actual_total = BoundaryLayout::create(m).total_boundary;

    rec.ratio_diagnostic = 0.0;
    for (int d = 0; d < ribbon.n_darts(); ++d) {
        const double ratio = 2.0 * w.per_dart[d] / rec.t[arc_of_dart(d)];
        rec.ratio_diagnostic = std::max(rec.ratio_diagnostic, std::fabs(ratio - 1.0));
    }

    const NormalizedBivector nb = normalized_bivector(m, fd_step);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            dev = std::max(dev, std::fabs(nb.coeffs.at(i, j) - H.coeffs.at(i, j)));
        }
    }
    rec.kontsevich_deviation = dev;

    if (rec.actual_total <= 1.0) {
        const DecoratedStructure dec = lambda_lengths(m);
        rec.has_decorated = true;
        rec.lambda = dec.lambda;
        const SimplicialCoordinates x = simplicial_coordinates(dec);
        const double sin_theta = rec.actual_total;
        double gap = 0.0;
        for (int i = 0; i < n; ++i) {
            const double normalized = 2.0 * w.per_arc[i] / sin_theta;
            gap = std::max(gap, std::fabs(normalized - x.per_arc[i]) / std::fabs(x.per_arc[i]));
        }
        rec.simplicial_gap = gap;
    }
    return rec;
}

} // namespace

FamilyScan family_scan(const RibbonStructure& maximal_ribbon,
                       const std::vector<double>& projective_weights,
                       const std::vector<double>& totals,
                       const ScanOptions& opts) {
    const int n = maximal_ribbon.n_arcs();
    if (!maximal_ribbon.is_maximal()) {
        throw InvalidTarget("family_scan: ribbon must be maximal");
    }
    if (static_cast<int>(projective_weights.size()) != n) {
        throw InvalidTarget("family_scan: need one weight per arc");
    }
    double sum = 0.0;
    for (double w : projective_weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InvalidTarget("family_scan: projective weights must be positive");
        }
        sum += w;
    }

    FamilyScan scan{maximal_ribbon, projective_weights, {}};
    for (double& w : scan.projective_weights) w /= sum;

    const KontsevichBivector H = kontsevich_bivector(maximal_ribbon);

    if (opts.parallel && !opts.warm_start) {
        std::vector<std::future<ScaleRecord>> futures;
        futures.reserve(totals.size());
        for (double total : totals) {
            futures.push_back(std::async(std::launch::async, [&, total] {
                return solve_one_scale(scan.ribbon, scan.projective_weights, H, total, opts.solve,
                                       opts.fd_step);
            }));
        }
        for (auto& f : futures) scan.records.push_back(f.get());
        return scan;
    }

    std::vector<double> warm;
    double warm_total = 0.0;
    for (double total : totals) {
        SolveOptions solve_opts = opts.solve;
        if (opts.warm_start && !warm.empty() && total > 0.0) {
            // Rescale the previous solution through the t-chart: widths grow
            // with the total boundary, and w ~ t/2 ties the charts together.
            std::vector<double> seed(n);
            for (int i = 0; i < n; ++i) {
                seed[i] = t_length(t_length(warm[i]) * total / warm_total);
            }
            solve_opts.initial = std::move(seed);
        }
        ScaleRecord rec = solve_one_scale(scan.ribbon, scan.projective_weights, H, total,
                                          solve_opts, opts.fd_step);
        if (rec.solved) {
            warm = rec.a;
            warm_total = total;
        }
        scan.records.push_back(std::move(rec));
    }
    return scan;
}

} // namespace arccoord
