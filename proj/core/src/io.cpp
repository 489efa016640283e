#include "weylgp/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "weylgp/parse.hpp"

namespace weylgp::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << content;
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("malformed JSON: ") + err.what());
    }
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

PresentationPtr presentation_from_json_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.contains("generators") || !j.contains("derivations"))
        throw ConfigError("presentation needs 'generators' and 'derivations'");
    std::vector<std::string> gens = j["generators"].get<std::vector<std::string>>();
    std::vector<std::string> derivs = j["derivations"].get<std::vector<std::string>>();
    const std::size_t r = gens.size();
    const std::size_t d = derivs.size();

    // The table is parsed against a name-only presentation first.
    std::vector<std::vector<CommPoly>> zero_table(r, std::vector<CommPoly>(d, CommPoly(r)));
    Presentation names_only(gens, derivs, zero_table);

    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(d, CommPoly(r)));
    if (r > 0) {
        if (!j.contains("table")) throw ConfigError("presentation needs a derivation table");
        const json& jt = j["table"];
        if (!jt.is_array() || jt.size() != r)
            throw ConfigError("derivation table needs one row per generator");
        for (std::size_t i = 0; i < r; ++i) {
            if (!jt[i].is_array() || jt[i].size() != d)
                throw ConfigError("derivation table rows need one entry per derivation");
            for (std::size_t k = 0; k < d; ++k) {
                try {
                    table[i][k] = parse_coeff_poly(jt[i][k].get<std::string>(), names_only);
                } catch (const ParseError& err) {
                    throw ConfigError("table entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(k + 1) + "): " + err.what());
                }
            }
        }
    }
    auto pres = std::make_shared<Presentation>(gens, derivs, table);

    if (j.contains("realizations")) {
        const json& jr = j["realizations"];
        if (!jr.is_array() || jr.size() != r)
            throw ConfigError("one realization per generator required");
        auto vars = coordinate_vars(d);
        std::vector<SymExpr> reals;
        for (std::size_t i = 0; i < r; ++i) {
            try {
                reals.push_back(parse_symexpr(jr[i].get<std::string>(), vars));
            } catch (const ParseError& err) {
                throw ConfigError("realization of " + gens[i] + ": " + err.what());
            }
        }
        pres->set_realizations(std::move(reals));
    }

    auto report = pres->validate();
    if (!report.ok) throw ConfigError("invalid presentation: " + report.message);
    return pres;
}

PresentationPtr load_presentation(const std::string& path) {
    return presentation_from_json_text(read_file(path));
}

std::string presentation_to_json_text(const Presentation& pres) {
    json j;
    j["generators"] = pres.generator_names();
    j["derivations"] = pres.derivation_names();
    json table = json::array();
    for (std::size_t i = 0; i < pres.gen_count(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < pres.deriv_count(); ++k)
            row.push_back(pres.table(i, k).to_string(pres.generator_names()));
        table.push_back(row);
    }
    j["table"] = table;
    return j.dump(2) + "\n";
}

namespace {

MonomialOrdering ordering_from_json(const json& j, const Presentation& pres) {
    if (j.is_null()) return MonomialOrdering::unit_degrevlex(pres.gen_count(), pres.deriv_count());
    std::string kind = j.value("kind", "degrevlex");
    if (kind == "degrevlex") {
        if (j.contains("weights")) {
            std::vector<Rational> weights;
            for (const auto& w : j["weights"])
                weights.push_back(w.is_string() ? parse_rational(w.get<std::string>())
                                                : Rational(w.get<double>()));
            if (weights.size() != pres.gen_count() + pres.deriv_count())
                throw ConfigError("weight vector length must be r + d");
            return MonomialOrdering::wdegrevlex(std::move(weights));
        }
        return MonomialOrdering::unit_degrevlex(pres.gen_count(), pres.deriv_count());
    }
    if (kind == "elim-partials") return MonomialOrdering::elim_partials();
    if (kind == "top")
        return MonomialOrdering::top(ordering_from_json(j.value("base", json()), pres));
    if (kind == "pot")
        return MonomialOrdering::pot(ordering_from_json(j.value("base", json()), pres));
    if (kind == "elim-components") {
        if (!j.contains("split")) throw ConfigError("elim-components needs 'split'");
        return MonomialOrdering::elim_components(
            j["split"].get<std::size_t>(),
            ordering_from_json(j.value("first", json()), pres),
            ordering_from_json(j.value("second", json()), pres));
    }
    throw ConfigError("unknown ordering kind '" + kind + "'");
}

}  // namespace

MonomialOrdering ordering_from_json_text(const std::string& text, const Presentation& pres) {
    return ordering_from_json(parse_json(text), pres);
}

OperatorMatrix matrix_from_json_text(const std::string& text, PresentationPtr pres,
                                     const MonomialOrdering& ord) {
    json j = parse_json(text);
    const json& entries = j.is_array() ? j : j.at("entries");
    if (!entries.is_array() || entries.empty())
        throw ConfigError("matrix needs a nonempty 'entries' array");
    std::vector<std::vector<OrePoly>> rows;
    for (const auto& jrow : entries) {
        std::vector<OrePoly> row;
        for (const auto& cell : jrow) {
            try {
                row.push_back(parse_operator(cell.get<std::string>(), pres, ord));
            } catch (const ParseError& err) {
                throw ConfigError(std::string("matrix entry: ") + err.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return OperatorMatrix::from_entries(std::move(rows));
}

std::string matrix_to_json_text(const OperatorMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        entries.push_back(row);
    }
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

void save_matrix(const std::string& path, const OperatorMatrix& m) {
    write_file(path, matrix_to_json_text(m));
}

OperatorMatrix load_matrix(const std::string& path, PresentationPtr pres,
                           const MonomialOrdering& ord) {
    return matrix_from_json_text(read_file(path), std::move(pres), ord);
}

std::string basis_to_json_text(const JanetBasis& basis) {
    json j;
    j["ordering"] = basis.ordering().describe();
    json elements = json::array();
    json multiplicative = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const OrePoly& g = basis.elements()[k];
        if (g.rank() == 1) {
            elements.push_back(g.to_string());
        } else {
            json row = json::array();
            for (std::uint32_t c = 1; c <= g.rank(); ++c)
                row.push_back(g.component_part(c).to_string());
            elements.push_back(row);
        }
        multiplicative.push_back(basis.multiplicative_names(k));
    }
    j["elements"] = elements;
    j["multiplicative"] = multiplicative;
    return j.dump(2) + "\n";
}

std::string parametrization_to_json_text(const ParametrizationResult& result) {
    json j;
    j["parametrizable"] = result.parametrizable;
    j["B"] = parse_json(matrix_to_json_text(result.B));
    j["Aprime"] = parse_json(matrix_to_json_text(result.Aprime));
    json certificate = json::array();
    for (std::size_t i = 0; i < result.certificate.size(); ++i) {
        const ReduceResult& trace = result.certificate[i];
        json entry;
        entry["row"] = i;
        entry["remainder_zero"] = trace.remainder.is_zero();
        json quotients = json::array();
        for (const auto& q : trace.quotients) quotients.push_back(q.to_string());
        entry["quotients"] = quotients;
        certificate.push_back(entry);
    }
    j["certificate"] = certificate;
    return j.dump(2) + "\n";
}

DataSet load_data_csv(const std::string& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    DataSet data;
    std::string line;
    bool header = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (header) {
            header = false;
            if (cells.size() != dim + 3)
                throw ConfigError("data header needs x1..xd,component,value,noise_var");
            continue;
        }
        if (cells.size() != dim + 3)
            throw ConfigError("data line " + std::to_string(lineno) + ": wrong column count");
        Observation obs;
        try {
            for (std::size_t a = 0; a < dim; ++a) obs.point.push_back(std::stod(cells[a]));
            long comp = std::stol(cells[dim]);
            if (comp < 1)
                throw ConfigError("data line " + std::to_string(lineno) +
                                  ": components are 1-based");
            obs.component = static_cast<std::size_t>(comp - 1);
            obs.value = std::stod(cells[dim + 1]);
            obs.noise_var = std::stod(cells[dim + 2]);
        } catch (const std::invalid_argument&) {
            throw ConfigError("data line " + std::to_string(lineno) + ": malformed number");
        }
        data.observations.push_back(std::move(obs));
    }
    return data;
}

void save_data_csv(const std::string& path, const DataSet& data, std::size_t dim) {
    std::ostringstream out;
    for (std::size_t a = 0; a < dim; ++a) out << "x" << (a + 1) << ",";
    out << "component,value,noise_var\n";
    for (const auto& obs : data.observations) {
        for (std::size_t a = 0; a < dim; ++a) out << format_double(obs.point[a]) << ",";
        out << (obs.component + 1) << "," << format_double(obs.value) << ","
            << format_double(obs.noise_var) << "\n";
    }
    write_file(path, out.str());
}

void save_grid_csv(const std::string& path, const std::vector<GridPoint>& grid,
                   std::size_t dim, std::size_t outputs) {
    std::ostringstream out;
    for (std::size_t a = 0; a < dim; ++a) out << "x" << (a + 1) << ",";
    for (std::size_t c = 0; c < outputs; ++c) out << "mean_" << (c + 1) << ",";
    for (std::size_t c = 0; c < outputs; ++c)
        out << "sd_" << (c + 1) << (c + 1 == outputs ? "" : ",");
    out << "\n";
    for (const auto& row : grid) {
        for (std::size_t a = 0; a < dim; ++a) out << format_double(row.point[a]) << ",";
        for (std::size_t c = 0; c < outputs; ++c) out << format_double(row.mean[c]) << ",";
        for (std::size_t c = 0; c < outputs; ++c)
            out << format_double(row.sd[c]) << (c + 1 == outputs ? "" : ",");
        out << "\n";
    }
    write_file(path, out.str());
}

std::vector<GridPoint> load_grid_csv(const std::string& path, std::size_t& dim,
                                     std::size_t& outputs) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty grid file '" + path + "'");
    std::size_t d = 0, ell = 0;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (cell.rfind("x", 0) == 0 && cell.find("_") == std::string::npos) ++d;
            if (cell.rfind("mean_", 0) == 0) ++ell;
        }
    }
    if (d == 0 || ell == 0) throw ConfigError("grid header must list x and mean columns");
    dim = d;
    outputs = ell;
    std::vector<GridPoint> grid;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> values;
        while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
        if (values.size() != d + 2 * ell) throw ConfigError("grid row has wrong column count");
        GridPoint row;
        row.point.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(d));
        row.mean.assign(values.begin() + static_cast<std::ptrdiff_t>(d),
                        values.begin() + static_cast<std::ptrdiff_t>(d + ell));
        row.sd.assign(values.begin() + static_cast<std::ptrdiff_t>(d + ell), values.end());
        grid.push_back(std::move(row));
    }
    return grid;
}

void render_quiver_svg(const std::string& path, const std::vector<GridPoint>& grid,
                       const std::vector<std::pair<double, double>>& box,
                       const std::function<double(const std::vector<double>&)>& region_value,
                       const std::vector<std::vector<double>>& data_points,
                       const SvgOptions& options) {
    if (box.size() != 2) throw ConfigError("quiver rendering needs a planar box");
    const double x0 = box[0].first, x1 = box[0].second;
    const double y0 = box[1].first, y1 = box[1].second;
    const double margin = 20.0;
    const double sx = (options.width - 2 * margin) / (x1 - x0);
    const double sy = (options.height - 2 * margin) / (y1 - y0);
    auto px = [&](double x) { return margin + (x - x0) * sx; };
    auto py = [&](double y) { return options.height - margin - (y - y0) * sy; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Zero contour of the region function by marching squares.
    if (region_value) {
        const int n = 160;
        auto value = [&](int i, int j) {
            std::vector<double> p = {x0 + (x1 - x0) * i / n, y0 + (y1 - y0) * j / n};
            return region_value(p);
        };
        svg << "<g stroke=\"#444\" stroke-width=\"1\" fill=\"none\">\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double v00 = value(i, j), v10 = value(i + 1, j);
                double v01 = value(i, j + 1), v11 = value(i + 1, j + 1);
                auto cross = [&](double a, double b) { return (a <= 0) != (b <= 0); };
                std::vector<std::pair<double, double>> pts;
                auto lerp = [&](double xa, double ya, double va, double xb, double yb,
                                double vb) {
                    double t = va / (va - vb);
                    pts.emplace_back(xa + t * (xb - xa), ya + t * (yb - ya));
                };
                double gx0 = x0 + (x1 - x0) * i / n, gx1 = x0 + (x1 - x0) * (i + 1) / n;
                double gy0 = y0 + (y1 - y0) * j / n, gy1 = y0 + (y1 - y0) * (j + 1) / n;
                if (cross(v00, v10)) lerp(gx0, gy0, v00, gx1, gy0, v10);
                if (cross(v10, v11)) lerp(gx1, gy0, v10, gx1, gy1, v11);
                if (cross(v01, v11)) lerp(gx0, gy1, v01, gx1, gy1, v11);
                if (cross(v00, v01)) lerp(gx0, gy0, v00, gx0, gy1, v01);
                if (pts.size() >= 2)
                    svg << "<line x1=\"" << px(pts[0].first) << "\" y1=\"" << py(pts[0].second)
                        << "\" x2=\"" << px(pts[1].first) << "\" y2=\"" << py(pts[1].second)
                        << "\"/>\n";
            }
        }
        svg << "</g>\n";
    }

    svg << "<g stroke=\"#1f6feb\" stroke-width=\"1\" fill=\"#1f6feb\">\n";
    for (const auto& row : grid) {
        if (row.mean.size() < 2) continue;
        double ax = row.point[0], ay = row.point[1];
        double bx = ax + options.arrow_scale * row.mean[0];
        double by = ay + options.arrow_scale * row.mean[1];
        svg << "<line x1=\"" << px(ax) << "\" y1=\"" << py(ay) << "\" x2=\"" << px(bx)
            << "\" y2=\"" << py(by) << "\"/>\n";
        svg << "<circle cx=\"" << px(bx) << "\" cy=\"" << py(by) << "\" r=\"1.2\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g fill=\"red\">\n";
    for (const auto& p : data_points)
        svg << "<circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\"4\"/>\n";
    svg << "</g>\n</svg>\n";
    write_file(path, svg.str());
}

}  // namespace weylgp::io
