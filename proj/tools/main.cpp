#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arccoord/gen.hpp"
#include "arccoord/interpolate.hpp"
#include "arccoord/io.hpp"
#include "arccoord/spine.hpp"
#include "arccoord/strebel.hpp"
#include "arccoord/wp.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitNoConvergence = 4;

bool verbose_enabled() {
    const char* env = std::getenv("ARCCOORD_LOG");
    return env != nullptr && *env != '\0' && std::string(env) != "0";
}

void logv(const std::string& msg) {
    if (verbose_enabled()) std::cerr << "[arccoord] " << msg << "\n";
}

struct Options {
    std::string input;
    std::string output;     // empty = stdout
    std::string format = "json";
    double tol = 1e-9;
    int max_flips = 0;      // 0 = default cap
    double fd_step = 1e-6;
    double truncation_height = 2.0;
    std::uint64_t seed = 1;
    std::vector<double> scales;
    bool normalized = false;
    bool kontsevich = false;
    bool cold_start = false;
    bool parallel = false;
    int genus = 1;
    int boundary = 1;
    double a_lo = 0.5;
    double a_hi = 2.5;
};

void emit(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw arccoord::ParseError("cannot write '" + output + "'");
    out << text;
}

json flips_to_json(const std::vector<arccoord::FlipMove>& flips) {
    json arr = json::array();
    for (const auto& f : flips) {
        arr.push_back({{"arc", f.arc}, {"old_length", f.old_length}, {"new_length", f.new_length}});
    }
    return arr;
}

void cmd_spine(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (!in.a_lengths) throw arccoord::ParseError("spine: input needs 'a_lengths'");
    const auto m = arccoord::MaximalCoordinates::create(in.ribbon, *in.a_lengths);
    arccoord::SpineOptions sopts;
    sopts.max_flips = opt.max_flips;
    const auto res = arccoord::find_spine(m, sopts);
    logv("spine: " + std::to_string(res.flips.size()) + " flips, support " +
         std::to_string(res.support_arcs.size()) + "/" + std::to_string(m.ribbon.n_arcs()));

    if (opt.format == "csv") {
        std::ostringstream out;
        out << arccoord::csv_header("arc,weight,a");
        out.precision(17);
        for (int arc = 0; arc < res.final_coords.ribbon.n_arcs(); ++arc) {
            out << arc << "," << res.final_weights[arc] << "," << res.final_coords.a[arc] << "\n";
        }
        emit(output, out.str());
        return;
    }
    json j = json::parse(arccoord::surface_to_json(res.final_coords.ribbon, &res.final_coords.a,
                                                   &res.final_weights));
    j["total_boundary"] = res.system.total_boundary;
    j["support_arcs"] = res.support_arcs;
    j["zero_arcs"] = res.zero_arcs;
    j["flips"] = flips_to_json(res.flips);
    emit(output, j.dump(2) + "\n");
}

void cmd_solve_widths(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (!in.weights) throw arccoord::ParseError("solve-widths: input needs 'weights'");
    arccoord::SolveOptions sopts;
    sopts.tol = opt.tol;
    sopts.fd_step = opt.fd_step;
    const auto rep = arccoord::solve_widths(in.ribbon, *in.weights, sopts);
    logv("solve-widths: " + std::to_string(rep.iterations) + " iterations, residual " +
         std::to_string(rep.residual));

    if (opt.format == "csv") {
        std::ostringstream out;
        out << arccoord::csv_header("arc,a,target_w");
        out.precision(17);
        for (int arc = 0; arc < in.ribbon.n_arcs(); ++arc) {
            out << arc << "," << rep.a[arc] << "," << (*in.weights)[arc] << "\n";
        }
        emit(output, out.str());
        return;
    }
    json j = json::parse(arccoord::surface_to_json(in.ribbon, &rep.a, &*in.weights));
    j["residual"] = rep.residual;
    j["iterations"] = rep.iterations;
    emit(output, j.dump(2) + "\n");
}

void cmd_tables(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (!in.a_lengths) throw arccoord::ParseError("tables: input needs 'a_lengths'");
    const auto m = arccoord::MaximalCoordinates::create(in.ribbon, *in.a_lengths);
    if (opt.format == "csv") {
        emit(output, arccoord::arc_table_csv(m) + "\n" + arccoord::circle_table_csv(m));
        return;
    }
    const auto w = arccoord::all_widths(m);
    const auto t = arccoord::t_lengths(m);
    const auto layout = arccoord::BoundaryLayout::create(m);
    json arcs = json::array();
    for (int arc = 0; arc < m.ribbon.n_arcs(); ++arc) {
        arcs.push_back({{"arc", arc},
                        {"a", m.a[arc]},
                        {"s", std::cosh(0.5 * m.a[arc])},
                        {"t", t[arc]},
                        {"w_fwd", w.per_dart[2 * arc]},
                        {"w_bwd", w.per_dart[2 * arc + 1]},
                        {"w", w.per_arc[arc]}});
    }
    json circles = json::array();
    for (size_t k = 0; k < layout.circles.size(); ++k) {
        circles.push_back({{"circle", k},
                           {"p", layout.circles[k].circumference},
                           {"darts", layout.circles[k].darts},
                           {"gaps", layout.circles[k].gaps}});
    }
    emit(output, json{{"arcs", arcs}, {"circles", circles}}.dump(2) + "\n");
}

void cmd_poisson(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (opt.kontsevich) {
        const auto H = arccoord::kontsevich_bivector(in.ribbon);
        emit(output, opt.format == "csv" ? arccoord::matrix_to_csv(H.coeffs)
                                         : arccoord::matrix_to_json(H.coeffs));
        return;
    }
    if (!in.a_lengths) throw arccoord::ParseError("poisson: input needs 'a_lengths'");
    const auto m = arccoord::MaximalCoordinates::create(in.ribbon, *in.a_lengths);
    const arccoord::SquareMatrix coeffs =
        opt.normalized ? arccoord::normalized_bivector(m, opt.fd_step).coeffs
                       : arccoord::poisson_bivector(m).coeffs;
    emit(output, opt.format == "csv" ? arccoord::matrix_to_csv(coeffs)
                                     : arccoord::matrix_to_json(coeffs));
}

std::vector<double> scan_scales(const Options& opt, const arccoord::SurfaceInput& input) {
    if (!opt.scales.empty()) return opt.scales;
    if (input.scales) return *input.scales;
    throw arccoord::ParseError("no scales given (use --scales or a 'scales' field)");
}

arccoord::ScanOptions scan_options(const Options& opt) {
    arccoord::ScanOptions sopts;
    sopts.warm_start = !opt.cold_start;
    sopts.parallel = opt.parallel && opt.cold_start;
    sopts.solve.tol = opt.tol;
    sopts.fd_step = opt.fd_step;
    return sopts;
}

void cmd_limit_scan(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (!in.weights) throw arccoord::ParseError("limit-scan: input needs 'weights'");
    const auto scan =
        arccoord::family_scan(in.ribbon, *in.weights, scan_scales(opt, in), scan_options(opt));
    std::ostringstream out;
    out << arccoord::csv_header("p,kontsevich_deviation,solved");
    out.precision(17);
    for (const auto& rec : scan.records) {
        out << rec.target_total << "," << rec.kontsevich_deviation << "," << (rec.solved ? 1 : 0)
            << "\n";
    }
    emit(output, out.str());
}

void cmd_interpolate(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (!in.weights) throw arccoord::ParseError("interpolate: input needs 'weights'");
    const auto scan =
        arccoord::family_scan(in.ribbon, *in.weights, scan_scales(opt, in), scan_options(opt));
    std::ostringstream out;
    out << arccoord::csv_header("p,arc,a,t,w,ratio_diagnostic,kontsevich_deviation,simplicial_gap");
    out.precision(17);
    for (const auto& rec : scan.records) {
        if (!rec.solved) continue;
        for (int arc = 0; arc < in.ribbon.n_arcs(); ++arc) {
            out << rec.target_total << "," << arc << "," << rec.a[arc] << "," << rec.t[arc] << ","
                << rec.w_arc[arc] << "," << rec.ratio_diagnostic << "," << rec.kontsevich_deviation
                << "," << (rec.has_decorated ? rec.simplicial_gap : -1.0) << "\n";
        }
    }
    emit(output, out.str());
}

void cmd_strebel(const Options& opt, const std::string& input, const std::string& output) {
    const auto in = arccoord::read_surface_file(input);
    if (!in.weights) throw arccoord::ParseError("strebel: input needs 'weights'");
    const auto graph = arccoord::WeightedRibbonGraph::create(in.ribbon, *in.weights);
    const auto complex = arccoord::build_flat_surface(graph);
    if (opt.format == "svg") {
        emit(output, arccoord::render_svg(complex, opt.truncation_height));
        return;
    }
    const auto orders = arccoord::zero_orders(complex);
    const auto residues = arccoord::quadratic_residues(complex);
    const auto div = arccoord::divisor_check(complex);
    json j;
    j["genus"] = complex.genus;
    j["n_arcs"] = complex.graph.ribbon.n_arcs();
    json cylinders = json::array();
    for (size_t i = 0; i < complex.cylinders.size(); ++i) {
        cylinders.push_back({{"circle", complex.cylinders[i].circle},
                             {"circumference", complex.cylinders[i].circumference},
                             {"boundary_word", complex.cylinders[i].boundary_word},
                             {"quadratic_residue", residues[i]}});
    }
    j["cylinders"] = cylinders;
    json vertices = json::array();
    for (size_t i = 0; i < complex.vertices.size(); ++i) {
        vertices.push_back({{"valence", complex.vertices[i].valence},
                            {"zero_order", orders[i]},
                            {"darts", complex.vertices[i].darts}});
    }
    j["vertices"] = vertices;
    j["divisor_check"] = {{"zero_order_sum", div.zero_order_sum},
                          {"double_poles", div.n_double_poles},
                          {"four_g_minus_four", div.expected_4g_minus_4},
                          {"consistent", div.consistent}};
    emit(output, j.dump(2) + "\n");
}

void cmd_random_surface(const Options& opt, const std::string&, const std::string& output) {
    arccoord::Rng rng(opt.seed);
    const auto ribbon = arccoord::random_maximal_ribbon({opt.genus, opt.boundary}, rng);
    const auto a = arccoord::random_lengths(ribbon.n_arcs(), opt.a_lo, opt.a_hi, rng);
    emit(output, arccoord::surface_to_json(ribbon, &a, nullptr));
}

using CommandFn = void (*)(const Options&, const std::string&, const std::string&);

// Single file: run in place. Directory: process every .json inside (sorted)
// and write one output per input into the --output directory.
int run_command(const Options& opt, CommandFn fn, const std::string& name) {
    if (!fs::is_directory(opt.input)) {
        fn(opt, opt.input, opt.output);
        return 0;
    }
    if (opt.output.empty()) {
        throw arccoord::ParseError("batch mode needs --output DIRECTORY");
    }
    fs::create_directories(opt.output);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    const std::string ext = opt.format == "json" ? ".json" : (opt.format == "csv" ? ".csv" : ".svg");
    for (const auto& file : files) {
        const fs::path out = fs::path(opt.output) / (file.stem().string() + "." + name + ext);
        logv("batch: " + file.string() + " -> " + out.string());
        fn(opt, file.string(), out.string());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations on hyperbolic surfaces with boundary in arc coordinates"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--tol", opt.tol, "Newton residual tolerance");
    app.add_option("--max-flips", opt.max_flips, "flip cap (0 = 10*N^2)");
    app.add_option("--fd-step", opt.fd_step, "relative finite-difference step");
    app.add_option("--format", opt.format, "output format: json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--seed", opt.seed, "seed for randomized subcommands");
    app.add_option("--truncation-height", opt.truncation_height, "tile height in SVG nets");
    app.add_option("-o,--output", opt.output, "output file, or directory in batch mode");

    auto* spine = app.add_subcommand("spine", "spinal arc system and widths of a surface");
    spine->add_option("input", opt.input, "surface JSON with a_lengths (or a directory)")
        ->required();

    auto* solve = app.add_subcommand("solve-widths", "a-lengths realizing target widths");
    solve->add_option("input", opt.input, "surface JSON with weights (or a directory)")->required();

    auto* tables = app.add_subcommand("tables", "per-arc and per-circle coordinate tables");
    tables->add_option("input", opt.input, "surface JSON with a_lengths (or a directory)")
        ->required();

    auto* poisson = app.add_subcommand("poisson", "Weil-Petersson bivector in a-coordinates");
    poisson->add_option("input", opt.input, "surface JSON with a_lengths (or a directory)")
        ->required();
    poisson->add_flag("--normalized", opt.normalized, "emit the normalized bivector");
    poisson->add_flag("--kontsevich", opt.kontsevich, "emit the Kontsevich bivector of the graph");

    auto* limit = app.add_subcommand("limit-scan", "deviation from the Kontsevich limit over scales");
    limit->add_option("input", opt.input, "surface JSON with weights (or a directory)")->required();
    limit->add_option("--scales", opt.scales, "total boundary lengths")->delimiter(',');
    limit->add_flag("--cold-start", opt.cold_start, "disable warm starting between scales");
    limit->add_flag("--parallel", opt.parallel, "solve scales concurrently (with --cold-start)");

    auto* interp = app.add_subcommand("interpolate", "coordinate family over total boundary length");
    interp->add_option("input", opt.input, "surface JSON with weights (or a directory)")->required();
    interp->add_option("--scales", opt.scales, "total boundary lengths")->delimiter(',');
    interp->add_flag("--cold-start", opt.cold_start, "disable warm starting between scales");
    interp->add_flag("--parallel", opt.parallel, "solve scales concurrently (with --cold-start)");

    auto* strebel = app.add_subcommand("strebel", "flat surface glued from a weighted ribbon graph");
    strebel->add_option("input", opt.input, "surface JSON with weights (or a directory)")->required();

    auto* rnd = app.add_subcommand("random-surface", "sample a random maximal surface");
    rnd->add_option("--genus", opt.genus, "genus");
    rnd->add_option("--boundary", opt.boundary, "boundary circles");
    rnd->add_option("--a-lo", opt.a_lo, "a-length lower bound");
    rnd->add_option("--a-hi", opt.a_hi, "a-length upper bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spine->parsed()) return run_command(opt, cmd_spine, "spine");
        if (solve->parsed()) return run_command(opt, cmd_solve_widths, "solve-widths");
        if (tables->parsed()) return run_command(opt, cmd_tables, "tables");
        if (poisson->parsed()) return run_command(opt, cmd_poisson, "poisson");
        if (limit->parsed()) return run_command(opt, cmd_limit_scan, "limit-scan");
        if (interp->parsed()) return run_command(opt, cmd_interpolate, "interpolate");
        if (strebel->parsed()) return run_command(opt, cmd_strebel, "strebel");
        if (rnd->parsed()) cmd_random_surface(opt, "", opt.output);
    } catch (const arccoord::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const arccoord::NoConvergence& e) {
        std::cerr << "error: " << e.what() << " (residual " << e.residual << ")\n";
        return kExitNoConvergence;
    } catch (const arccoord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
