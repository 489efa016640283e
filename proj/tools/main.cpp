// Command-line front end: Janet bases, operator nullspaces, parametrizations,
// boundary intersections, and Gaussian-process conditioning driven by a JSON
// configuration with one section per stage. Stages communicate through files
// in the output directory so every intermediate is inspectable.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "weylgp/boundary.hpp"
#include "weylgp/gp.hpp"
#include "weylgp/io.hpp"
#include "weylgp/janet.hpp"
#include "weylgp/parse.hpp"
#include "weylgp/syzygy.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace weylgp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAlgebra = 3;
constexpr int kExitNumeric = 4;

struct Options {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double lengthscale = 0.0;  // 0 = take the config value (default 1)
    std::string side = "right";
};

struct Context {
    Options opts;
    json config;
    fs::path config_dir;
    fs::path out_dir;

    fs::path resolve_input(const std::string& path) const {
        fs::path p(path);
        if (p.is_absolute()) return p;
        if (fs::exists(config_dir / p)) return config_dir / p;
        if (fs::exists(out_dir / p)) return out_dir / p;
        return config_dir / p;
    }
    fs::path resolve_output(const std::string& path) const {
        fs::path p(path);
        return p.is_absolute() ? p : out_dir / p;
    }
};

Context make_context(const Options& opts) {
    Context ctx;
    ctx.opts = opts;
    ctx.config = json::parse(io::read_file(opts.config_path), nullptr, true);
    ctx.config_dir = fs::path(opts.config_path).parent_path();
    ctx.out_dir = opts.out_dir;
    fs::create_directories(ctx.out_dir);
    return ctx;
}

PresentationPtr load_presentation(const Context& ctx) {
    if (!ctx.config.contains("presentation"))
        throw ConfigError("config needs a 'presentation' section");
    const json& j = ctx.config["presentation"];
    if (j.contains("preset")) {
        std::string preset = j["preset"].get<std::string>();
        if (preset == "double-drop") return double_drop_presentation();
        if (preset == "snake") return snake_presentation();
        if (preset == "exp-circle") return exp_circle_presentation();
        throw ConfigError("unknown presentation preset '" + preset + "'");
    }
    if (j.contains("file"))
        return io::load_presentation(ctx.resolve_input(j["file"].get<std::string>()).string());
    return io::presentation_from_json_text(j.dump());
}

MonomialOrdering load_ordering(const Context& ctx, const Presentation& pres) {
    if (!ctx.config.contains("ordering")) return default_scalar_ordering(pres);
    return io::ordering_from_json_text(ctx.config["ordering"].dump(), pres);
}

OperatorMatrix matrix_from_config(const Context& ctx, const json& j, PresentationPtr pres,
                                  const MonomialOrdering& ord) {
    if (j.is_array()) return io::matrix_from_json_text(j.dump(), std::move(pres), ord);
    if (j.contains("file"))
        return io::load_matrix(ctx.resolve_input(j["file"].get<std::string>()).string(),
                               std::move(pres), ord);
    if (j.contains("entries"))
        return io::matrix_from_json_text(j.dump(), std::move(pres), ord);
    throw ConfigError("matrix must be an array, {'entries': ...} or {'file': ...}");
}

BoundarySpec boundary_spec_from_json(const Context& ctx, const json& j, std::size_t outputs) {
    BoundarySpec spec;
    if (!j.contains("kind")) throw ConfigError("boundary needs a 'kind'");
    spec.kind = boundary_kind_from_string(j["kind"].get<std::string>());
    spec.dim = j.contains("d") ? j["d"].get<std::size_t>() : j.value("dim", std::size_t{1});
    spec.outputs = j.value("outputs", outputs);
    if (j.contains("delta")) {
        const json& d = j["delta"];
        spec.delta = d.is_string() ? parse_rational(d.get<std::string>())
                                   : Rational(d.get<double>());
    }
    spec.preset = j.value("preset", std::string());
    spec.codim2_variant = j.value("variant", std::string("analytic"));
    if (j.contains("f"))
        spec.implicit_f =
            parse_symexpr(j["f"].get<std::string>(), coordinate_vars(std::max(spec.dim, 2ul)));
    (void)ctx;
    return spec;
}

RegionPredicate region_from_json(const json& j, std::size_t dim, double tol) {
    if (j.is_null()) return nullptr;
    std::string text = j.get<std::string>();
    if (text == "preset:double-drop")
        return [tol](const std::vector<double>& p) { return double_drop_inside(p, tol); };
    if (text == "preset:snake")
        return [tol](const std::vector<double>& p) { return snake_inside(p, tol); };
    SymExpr f = parse_symexpr(text, coordinate_vars(dim));
    return [f, tol](const std::vector<double>& p) { return f.eval(p) <= tol; };
}

std::function<double(const std::vector<double>&)> region_value_from_json(const json& j,
                                                                         std::size_t dim) {
    if (j.is_null()) return nullptr;
    std::string text = j.get<std::string>();
    if (text == "preset:double-drop") {
        auto pres = double_drop_presentation();
        SymExpr f = pres->realize(double_drop_poly(), VarBlock::X);
        return [f](const std::vector<double>& p) { return f.eval(p); };
    }
    if (text == "preset:snake") {
        auto pres = snake_presentation();
        SymExpr f = pres->realize(snake_poly(), VarBlock::X);
        return [f](const std::vector<double>& p) { return f.eval(p); };
    }
    SymExpr f = parse_symexpr(text, coordinate_vars(dim));
    return [f](const std::vector<double>& p) { return f.eval(p); };
}

int cmd_janet(const Context& ctx) {
    if (!ctx.config.contains("janet")) throw ConfigError("config needs a 'janet' section");
    const json& j = ctx.config["janet"];
    PresentationPtr pres = load_presentation(ctx);
    MonomialOrdering ord = load_ordering(ctx, *pres);

    std::vector<OrePoly> generators;
    if (j.contains("generators")) {
        for (const auto& cell : j["generators"])
            generators.push_back(parse_operator(cell.get<std::string>(), pres, ord));
        if (!ord.is_scalar() && ord.kind() != MonomialOrdering::Kind::WDegRevLex)
            throw ConfigError("scalar generators need a scalar ordering");
    } else if (j.contains("module_generators")) {
        OperatorMatrix rows = matrix_from_config(ctx, j["module_generators"], pres, ord);
        MonomialOrdering mord = MonomialOrdering::top(ord);
        for (std::size_t i = 0; i < rows.rows(); ++i)
            generators.push_back(rows.row_element(i, mord));
        ord = mord;
    } else {
        throw ConfigError("janet needs 'generators' or 'module_generators'");
    }

    JanetBasis basis = janet_basis(generators, ord);
    std::string out = j.value("output", std::string("janet_basis.json"));
    io::write_file(ctx.resolve_output(out).string(), io::basis_to_json_text(basis));
    std::cout << "janet basis: " << basis.size() << " elements -> "
              << ctx.resolve_output(out).string() << "\n";
    return kExitOk;
}

int cmd_nullspace(const Context& ctx) {
    if (!ctx.config.contains("nullspace"))
        throw ConfigError("config needs a 'nullspace' section");
    const json& j = ctx.config["nullspace"];
    PresentationPtr pres = load_presentation(ctx);
    MonomialOrdering ord = load_ordering(ctx, *pres);
    OperatorMatrix A = matrix_from_config(ctx, j.at("matrix"), pres, ord);
    std::string side = ctx.opts.side.empty() ? j.value("side", "right") : ctx.opts.side;

    OperatorMatrix kernel = side == "left" ? left_kernel(A, ord) : right_kernel(A, ord);
    std::string out = j.value("output", std::string("nullspace.json"));
    io::save_matrix(ctx.resolve_output(out).string(), kernel);
    std::cout << side << " nullspace: " << kernel.rows() << "x" << kernel.cols() << " -> "
              << ctx.resolve_output(out).string() << "\n";
    return kExitOk;
}

int cmd_parametrize(const Context& ctx) {
    if (!ctx.config.contains("parametrize"))
        throw ConfigError("config needs a 'parametrize' section");
    const json& j = ctx.config["parametrize"];
    PresentationPtr pres = load_presentation(ctx);
    MonomialOrdering ord = load_ordering(ctx, *pres);
    OperatorMatrix A = matrix_from_config(ctx, j.at("matrix"), pres, ord);

    ParametrizationResult result = parametrize(A);
    std::string out = j.value("output", std::string("parametrization.json"));
    io::write_file(ctx.resolve_output(out).string(),
                   io::parametrization_to_json_text(result));
    std::cout << "parametrizable: " << (result.parametrizable ? "true" : "false") << " -> "
              << ctx.resolve_output(out).string() << "\n";
    return kExitOk;
}

int cmd_intersect(const Context& ctx) {
    if (!ctx.config.contains("intersect"))
        throw ConfigError("config needs an 'intersect' section");
    const json& j = ctx.config["intersect"];
    PresentationPtr pres = load_presentation(ctx);
    MonomialOrdering ord = load_ordering(ctx, *pres);
    OperatorMatrix B1 = matrix_from_config(ctx, j.at("b1"), pres, ord);

    OperatorMatrix B2(pres, ord, 0, 0);
    if (j.contains("boundary")) {
        BoundarySpec spec = boundary_spec_from_json(ctx, j["boundary"], B1.rows());
        BoundaryResult boundary = build_boundary(spec);
        if (boundary.numeric_only)
            throw ConfigError("boundary kind '" + to_string(spec.kind) +
                              "' is numeric-only and cannot enter the symbolic intersection");
        if (!boundary.presentation->compatible(*pres))
            throw ConfigError("boundary presentation differs from the config presentation");
        B2 = *boundary.op;
        // Re-anchor on the shared presentation object.
        std::vector<std::vector<OrePoly>> entries;
        for (std::size_t r = 0; r < B2.rows(); ++r) {
            std::vector<OrePoly> row;
            for (std::size_t c = 0; c < B2.cols(); ++c)
                row.push_back(parse_operator(B2.at(r, c).to_string(), pres, ord));
            entries.push_back(std::move(row));
        }
        B2 = OperatorMatrix::from_entries(std::move(entries));
    } else if (j.contains("b2")) {
        B2 = matrix_from_config(ctx, j["b2"], pres, ord);
    } else {
        throw ConfigError("intersect needs 'boundary' or 'b2'");
    }

    auto [P, C] = intersect_parametrizations(B1, B2);
    std::string pout = j.value("output", std::string("P.json"));
    std::string cout_name = j.value("kernel_output", std::string("C.json"));
    io::save_matrix(ctx.resolve_output(pout).string(), P);
    io::save_matrix(ctx.resolve_output(cout_name).string(), C);
    std::cout << "intersection parametrization: " << P.rows() << "x" << P.cols() << " -> "
              << ctx.resolve_output(pout).string() << "\n";
    return kExitOk;
}

GaussianProcess build_prior(const Context& ctx, const json& j, std::size_t& dim_out) {
    Rational lengthscale(1);
    if (ctx.opts.lengthscale > 0.0)
        lengthscale = Rational(ctx.opts.lengthscale);
    else if (j.contains("lengthscale"))
        lengthscale = Rational(j["lengthscale"].get<double>());

    const json& par = j.at("parametrization");
    GaussianProcess prior = GaussianProcess::iid_se(1, 1, lengthscale);  // replaced below
    if (par.contains("boundary")) {
        BoundarySpec spec = boundary_spec_from_json(ctx, par["boundary"], 1);
        BoundaryResult boundary = build_boundary(spec);
        std::size_t dim = spec.kind == BoundaryKind::Codim2Axis ? 3 : spec.dim;
        std::size_t inner = boundary.entries.front().size();
        prior = multiplier_pushforward(boundary.entries,
                                       GaussianProcess::iid_se(dim, inner, lengthscale));
        dim_out = dim;
    } else if (par.contains("curl_multiplier")) {
        const json& cm = par["curl_multiplier"];
        std::string preset = cm.value("preset", std::string());
        long power = cm.value("power", 2);
        PresentationPtr pres;
        CommPoly f;
        if (preset == "double-drop") {
            pres = double_drop_presentation();
            f = double_drop_poly();
        } else if (preset == "snake") {
            pres = snake_presentation();
            f = snake_poly();
        } else {
            throw ConfigError("unknown curl multiplier preset '" + preset + "'");
        }
        CommPoly fp(pres->gen_count(), Rational(1));
        for (long k = 0; k < power; ++k) fp = fp * f;
        MonomialOrdering ord = default_scalar_ordering(*pres);
        OperatorMatrix B(pres, ord, 2, 1);
        OrePoly mult = OrePoly::from_coeff(pres, ord, fp);
        B.set(0, 0, OrePoly::partial(pres, ord, 1).multiply(mult));
        B.set(1, 0, -(OrePoly::partial(pres, ord, 0).multiply(mult)));
        prior = pushforward(B, GaussianProcess::iid_se(2, 1, lengthscale));
        dim_out = 2;
    } else {
        PresentationPtr pres = load_presentation(ctx);
        MonomialOrdering ord = load_ordering(ctx, *pres);
        OperatorMatrix B =
            matrix_from_config(ctx, par.contains("matrix") ? par["matrix"] : par, pres, ord);
        std::size_t dim = pres->deriv_count();
        prior = pushforward(B, GaussianProcess::iid_se(dim, B.cols(), lengthscale));
        dim_out = dim;
    }

    if (j.contains("mean_potential")) {
        if (prior.outputs() != 2 || dim_out != 2)
            throw ConfigError("mean potentials require a planar two-component field");
        SymExpr p = parse_symexpr(j["mean_potential"].get<std::string>(), coordinate_vars(2));
        std::vector<SymExpr> mean = {p.diff(VarBlock::X, 1), -p.diff(VarBlock::X, 0)};
        prior = GaussianProcess(std::move(mean), prior.covariance());
    }
    return prior;
}

int cmd_gp(const Context& ctx) {
    if (!ctx.config.contains("gp")) throw ConfigError("config needs a 'gp' section");
    const json& j = ctx.config["gp"];
    std::size_t dim = 0;
    GaussianProcess prior = build_prior(ctx, j, dim);

    DataSet data;
    if (j.contains("data"))
        data = io::load_data_csv(ctx.resolve_input(j["data"].get<std::string>()).string(), dim);

    PosteriorGP posterior(prior, data);
    if (posterior.used_jitter())
        std::cerr << "note: added jitter " << posterior.jitter()
                  << " to factor the data covariance\n";

    const json& grid_cfg = j.at("grid");
    std::vector<std::pair<double, double>> box;
    for (const auto& axis : grid_cfg.at("box"))
        box.emplace_back(axis[0].get<double>(), axis[1].get<double>());
    if (box.size() != dim) throw ConfigError("grid box dimension mismatch");
    std::vector<std::size_t> resolution =
        grid_cfg.at("resolution").get<std::vector<std::size_t>>();
    double tol = grid_cfg.value("region_tol", 0.0);
    RegionPredicate region =
        region_from_json(grid_cfg.contains("region") ? grid_cfg["region"] : json(), dim, tol);

    auto grid = field_grid(posterior, box, resolution, region,
                           std::max(1u, ctx.opts.threads));

    const json& outputs = j.at("outputs");
    std::string grid_out = outputs.at("grid").get<std::string>();
    io::save_grid_csv(ctx.resolve_output(grid_out).string(), grid, dim, prior.outputs());
    std::cout << "grid: " << grid.size() << " points -> "
              << ctx.resolve_output(grid_out).string() << "\n";

    if (j.contains("samples")) {
        const json& sj = j["samples"];
        std::vector<std::vector<double>> points;
        for (const auto& row : grid) points.push_back(row.point);
        std::size_t count = sj.value("count", std::size_t{1});
        Eigen::MatrixXd draws = sample_prior(prior, points, ctx.opts.seed, count);
        std::ostringstream out;
        for (Eigen::Index r = 0; r < draws.rows(); ++r) {
            for (Eigen::Index c = 0; c < draws.cols(); ++c) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", draws(r, c));
                out << (c ? "," : "") << buf;
            }
            out << "\n";
        }
        io::write_file(ctx.resolve_output(sj.at("file").get<std::string>()).string(),
                       out.str());
    }

    if (outputs.contains("svg")) {
        if (prior.outputs() != 2 || dim != 2)
            throw ConfigError("quiver rendering needs a planar two-component field");
        std::vector<std::vector<double>> markers;
        for (const auto& obs : data.observations) markers.push_back(obs.point);
        io::SvgOptions svg;
        svg.arrow_scale = j.value("svg", json::object()).value("arrow_scale", 0.25);
        io::render_quiver_svg(
            ctx.resolve_output(outputs["svg"].get<std::string>()).string(), grid, box,
            region_value_from_json(grid_cfg.contains("region") ? grid_cfg["region"] : json(),
                                   dim),
            markers, svg);
    }
    return kExitOk;
}

int cmd_render(const Context& ctx) {
    if (!ctx.config.contains("render")) throw ConfigError("config needs a 'render' section");
    const json& j = ctx.config["render"];
    std::size_t dim = 0, outputs = 0;
    auto grid =
        io::load_grid_csv(ctx.resolve_input(j.at("grid").get<std::string>()).string(), dim,
                          outputs);
    if (dim != 2 || outputs != 2)
        throw ConfigError("quiver rendering needs a planar two-component field");
    std::vector<std::pair<double, double>> box;
    if (j.contains("box")) {
        for (const auto& axis : j["box"])
            box.emplace_back(axis[0].get<double>(), axis[1].get<double>());
    } else {
        box = {{0.0, 1.0}, {0.0, 1.0}};
        for (const auto& row : grid)
            for (std::size_t a = 0; a < 2; ++a) {
                box[a].first = std::min(box[a].first, row.point[a]);
                box[a].second = std::max(box[a].second, row.point[a]);
            }
    }
    std::vector<std::vector<double>> markers;
    if (j.contains("data")) {
        DataSet data =
            io::load_data_csv(ctx.resolve_input(j["data"].get<std::string>()).string(), dim);
        for (const auto& obs : data.observations) markers.push_back(obs.point);
    }
    io::SvgOptions svg;
    svg.arrow_scale = j.value("arrow_scale", 0.25);
    io::render_quiver_svg(
        ctx.resolve_output(j.at("svg").get<std::string>()).string(), grid, box,
        region_value_from_json(j.contains("region") ? j["region"] : json(), dim), markers,
        svg);
    std::cout << "svg -> " << ctx.resolve_output(j.at("svg").get<std::string>()).string()
              << "\n";
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"Gaussian-process priors constrained by operator equations and analytic "
                 "boundary conditions"};
    app.require_subcommand(1);

    Options opts;
    opts.side.clear();
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opts.config_path, "pipeline configuration file")
            ->required();
        cmd->add_option("--out", opts.out_dir, "output directory (default: out)");
        cmd->add_option("--seed", opts.seed, "random seed for sampling outputs");
        cmd->add_option("--threads", opts.threads, "worker threads for grid evaluation");
        cmd->add_option("--lengthscale", opts.lengthscale,
                        "kernel lengthscale override (default from config, 1)");
    };

    CLI::App* janet = app.add_subcommand("janet", "compute a Janet basis");
    add_common(janet);
    CLI::App* nullspace = app.add_subcommand("nullspace", "compute a one-sided nullspace");
    add_common(nullspace);
    nullspace->add_option("--side", opts.side, "left or right (default right)")
        ->check(CLI::IsMember({"left", "right"}));
    CLI::App* param = app.add_subcommand("parametrize", "decide parametrizability");
    add_common(param);
    CLI::App* intersect =
        app.add_subcommand("intersect", "intersect a parametrization with a boundary");
    add_common(intersect);
    CLI::App* gp = app.add_subcommand("gp", "condition the constrained prior on data");
    add_common(gp);
    CLI::App* render = app.add_subcommand("render", "render a grid file as SVG");
    add_common(render);

    CLI11_PARSE(app, argc, argv);

    struct Stage {
        CLI::App* cmd;
        int (*fn)(const Context&);
        int failure_exit;
    };
    const Stage stages[] = {
        {janet, cmd_janet, kExitAlgebra},     {nullspace, cmd_nullspace, kExitAlgebra},
        {param, cmd_parametrize, kExitAlgebra}, {intersect, cmd_intersect, kExitAlgebra},
        {gp, cmd_gp, kExitNumeric},           {render, cmd_render, kExitNumeric},
    };
    for (const auto& stage : stages) {
        if (!stage.cmd->parsed()) continue;
        try {
            Context ctx = make_context(opts);
            return stage.fn(ctx);
        } catch (const ConfigError& err) {
            std::cerr << "config error: " << err.what() << "\n";
            return kExitConfig;
        } catch (const ParseError& err) {
            std::cerr << "parse error: " << err.what() << "\n";
            return kExitConfig;
        } catch (const json::exception& err) {
            std::cerr << "config error: " << err.what() << "\n";
            return kExitConfig;
        } catch (const NumericError& err) {
            std::cerr << "numeric error: " << err.what() << "\n";
            return kExitNumeric;
        } catch (const std::exception& err) {
            std::cerr << "error: " << err.what() << "\n";
            return stage.failure_exit;
        }
    }
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
