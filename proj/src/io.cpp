#include "arccoord/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace arccoord {

namespace {

using nlohmann::json;

std::vector<double> as_doubles(const json& j, const char* field, size_t expect) {
    if (!j.is_array() || j.size() != expect) {
        throw ParseError(std::string("field '") + field + "' must be an array of length " +
                         std::to_string(expect));
    }
    std::vector<double> out;
    out.reserve(expect);
    for (const auto& v : j) {
        if (!v.is_number()) throw ParseError(std::string("field '") + field + "' must be numeric");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

SurfaceInput parse_surface_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    for (const char* field : {"genus", "boundary", "arcs", "sigma_inf", "circle_of_dart"}) {
        if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
    }
    const int genus = j["genus"].get<int>();
    const int boundary = j["boundary"].get<int>();
    const int arcs = j["arcs"].get<int>();
    if (arcs < 0) throw ParseError("'arcs' must be >= 0");
    const size_t nd = static_cast<size_t>(2 * arcs);
    std::vector<int> sigma_inf, circle_of;
    for (const auto& [field, dst] :
         {std::pair<const char*, std::vector<int>*>{"sigma_inf", &sigma_inf},
          {"circle_of_dart", &circle_of}}) {
        const auto& arr = j[field];
        if (!arr.is_array() || arr.size() != nd) {
            throw ParseError(std::string("field '") + field + "' must list all " +
                             std::to_string(nd) + " darts");
        }
        for (const auto& v : arr) {
            if (!v.is_number_integer()) {
                throw ParseError(std::string("field '") + field + "' must hold integers");
            }
            dst->push_back(v.get<int>());
        }
    }

    RibbonStructure ribbon = [&] {
        try {
            return RibbonStructure::create({genus, boundary}, arcs, std::move(sigma_inf),
                                           std::move(circle_of));
        } catch (const Error& e) {
            throw ParseError(std::string("invalid surface description: ") + e.what());
        }
    }();

    SurfaceInput input{std::move(ribbon), std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("a_lengths")) input.a_lengths = as_doubles(j["a_lengths"], "a_lengths", arcs);
    if (j.contains("weights")) input.weights = as_doubles(j["weights"], "weights", arcs);
    if (j.contains("scales")) {
        if (!j["scales"].is_array()) throw ParseError("field 'scales' must be an array");
        input.scales = as_doubles(j["scales"], "scales", j["scales"].size());
    }
    return input;
}

SurfaceInput read_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_surface_json(buf.str());
}

std::string surface_to_json(const RibbonStructure& ribbon,
                            const std::vector<double>* a_lengths,
                            const std::vector<double>* weights) {
    json j;
    j["genus"] = ribbon.signature().genus;
    j["boundary"] = ribbon.signature().n_boundary;
    j["arcs"] = ribbon.n_arcs();
    j["sigma_inf"] = ribbon.sigma_inf();
    j["circle_of_dart"] = ribbon.circle_of();
    if (a_lengths) j["a_lengths"] = *a_lengths;
    if (weights) j["weights"] = *weights;
    return j.dump(2) + "\n";
}

std::string csv_header(const std::string& columns) {
    return "# arccoord csv v1: " + columns + "\n" + columns + "\n";
}

std::string matrix_to_csv(const SquareMatrix& m) {
    std::ostringstream out;
    out << "# arccoord csv v1: antisymmetric matrix, one row per basis arc\n";
    out.precision(17);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            if (j) out << ",";
            out << m.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

std::string matrix_to_json(const SquareMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n}, {"matrix", rows}}.dump(2) + "\n";
}

std::string arc_table_csv(const MaximalCoordinates& m) {
    const Widths w = all_widths(m);
    const auto t = t_lengths(m);
    std::ostringstream out;
    out << csv_header("arc,a,s,t,w_fwd,w_bwd,w");
    out.precision(17);
    for (int arc = 0; arc < m.ribbon.n_arcs(); ++arc) {
        out << arc << "," << m.a[arc] << "," << std::cosh(0.5 * m.a[arc]) << "," << t[arc] << ","
            << w.per_dart[2 * arc] << "," << w.per_dart[2 * arc + 1] << "," << w.per_arc[arc]
            << "\n";
    }
    return out.str();
}

std::string circle_table_csv(const MaximalCoordinates& m) {
    const auto layout = BoundaryLayout::create(m);
    std::ostringstream out;
    out << csv_header("circle,p,darts,gaps");
    out.precision(17);
    for (size_t k = 0; k < layout.circles.size(); ++k) {
        const auto& c = layout.circles[k];
        out << k << "," << c.circumference << ",";
        for (size_t i = 0; i < c.darts.size(); ++i) {
            if (i) out << " ";
            out << c.darts[i];
        }
        out << ",";
        for (size_t i = 0; i < c.gaps.size(); ++i) {
            if (i) out << " ";
            out << c.gaps[i];
        }
        out << "\n";
    }
    return out.str();
}

} // namespace arccoord
