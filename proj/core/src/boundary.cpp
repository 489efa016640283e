#include "weylgp/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace weylgp {

BoundaryKind boundary_kind_from_string(const std::string& name) {
    if (name == "dirichlet-box-poly") return BoundaryKind::DirichletBoxPoly;
    if (name == "dirichlet-box-exp") return BoundaryKind::DirichletBoxExp;
    if (name == "dirichlet-box-sd") return BoundaryKind::DirichletBoxSd;
    if (name == "dirichlet-neumann-exp") return BoundaryKind::DirichletNeumannExp;
    if (name == "dirichlet-neumann-sd") return BoundaryKind::DirichletNeumannSd;
    if (name == "codim2-axis") return BoundaryKind::Codim2Axis;
    if (name == "implicit") return BoundaryKind::Implicit;
    throw std::invalid_argument("unknown boundary kind '" + name + "'");
}

std::string to_string(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::DirichletBoxPoly: return "dirichlet-box-poly";
        case BoundaryKind::DirichletBoxExp: return "dirichlet-box-exp";
        case BoundaryKind::DirichletBoxSd: return "dirichlet-box-sd";
        case BoundaryKind::DirichletNeumannExp: return "dirichlet-neumann-exp";
        case BoundaryKind::DirichletNeumannSd: return "dirichlet-neumann-sd";
        case BoundaryKind::Codim2Axis: return "codim2-axis";
        case BoundaryKind::Implicit: return "implicit";
    }
    return "?";
}

namespace {

SymExpr coord(std::size_t i) { return SymExpr::var(VarBlock::X, i); }

// prod_i x_i (x_i - 1) as an expression.
SymExpr box_product_expr(std::size_t dim) {
    std::vector<SymExpr> factors;
    for (std::size_t i = 0; i < dim; ++i)
        factors.push_back(coord(i) * (coord(i) - SymExpr::num(1)));
    return SymExpr::mul(std::move(factors));
}

SymExpr box_product_sq_expr(std::size_t dim) {
    std::vector<SymExpr> factors;
    for (std::size_t i = 0; i < dim; ++i)
        factors.push_back(SymExpr::pow(coord(i) * (coord(i) - SymExpr::num(1)), 2));
    return SymExpr::mul(std::move(factors));
}

// prod_i x_i (x_i - 1) as a polynomial over the coordinate presentation.
CommPoly box_product_poly(std::size_t dim) {
    CommPoly prod(dim, Rational(1));
    for (std::size_t i = 0; i < dim; ++i) {
        CommPoly xi = CommPoly::variable(dim, i);
        prod = prod * (xi * xi - xi);
    }
    return prod;
}

BoundaryResult diagonal_result(const SymExpr& entry, std::size_t outputs, bool numeric_only) {
    BoundaryResult result;
    result.numeric_only = numeric_only;
    result.entries.assign(outputs, std::vector<SymExpr>(outputs, SymExpr::num(0)));
    for (std::size_t i = 0; i < outputs; ++i) result.entries[i][i] = entry;
    return result;
}

void attach_diagonal_operator(BoundaryResult& result, const PresentationPtr& pres,
                              const CommPoly& entry, std::size_t outputs) {
    auto ord = MonomialOrdering::unit_degrevlex(pres->gen_count(), pres->deriv_count());
    OperatorMatrix op(pres, ord, outputs, outputs);
    OrePoly e = OrePoly::from_coeff(pres, ord, entry);
    for (std::size_t i = 0; i < outputs; ++i) op.set(i, i, e);
    result.op = std::move(op);
    result.presentation = pres;
}

// 1 - exp(sign * prod / delta) over coordinates extended by the generator
// E = exp(sign * prod / delta), whose derivatives stay polynomial.
BoundaryResult exp_box_result(std::size_t dim, const Rational& delta, bool squared,
                              std::size_t outputs) {
    const Rational sign = squared ? Rational(-1)
                                  : (dim % 2 == 1 ? Rational(1) : Rational(-1));
    const std::size_t r = dim + 1;

    CommPoly prod(r, Rational(1));
    for (std::size_t i = 0; i < r - 1; ++i) {
        CommPoly xi = CommPoly::variable(r, i);
        CommPoly factor = xi * xi - xi;
        prod = prod * (squared ? factor * factor : factor);
    }
    CommPoly arg = prod * (sign / delta);

    std::vector<std::string> gens, derivs;
    for (std::size_t i = 0; i < dim; ++i) {
        std::string base = dim <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1);
        gens.push_back(base);
        derivs.push_back("d" + base);
    }
    gens.push_back("E");
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(dim, CommPoly(r)));
    for (std::size_t i = 0; i < dim; ++i) table[i][i] = CommPoly(r, Rational(1));
    CommPoly E = CommPoly::variable(r, r - 1);
    for (std::size_t j = 0; j < dim; ++j) table[r - 1][j] = arg.partial(j) * E;
    auto pres = std::make_shared<Presentation>(gens, derivs, table);

    SymExpr arg_expr = SymExpr::num(sign / delta) *
                       (squared ? box_product_sq_expr(dim) : box_product_expr(dim));
    std::vector<SymExpr> reals;
    for (std::size_t i = 0; i < dim; ++i) reals.push_back(coord(i));
    reals.push_back(SymExpr::exp(arg_expr));
    pres->set_realizations(std::move(reals));

    SymExpr entry = SymExpr::num(1) - SymExpr::exp(arg_expr);
    BoundaryResult result = diagonal_result(entry, outputs, false);
    attach_diagonal_operator(result, pres, CommPoly(r, Rational(1)) - E, outputs);
    return result;
}

// One factor of the standard-deviation construction in coordinate i:
// 1 + (exp(-x^2/d) - 2 exp(-(x^2-x+1)/d) + exp(-(x-1)^2/d)) / (exp(-1/d) - 1).
SymExpr sd_factor(std::size_t i, const Rational& delta) {
    Rational inv = Rational(-1) / delta;
    SymExpr x = coord(i);
    SymExpr e1 = SymExpr::exp(SymExpr::num(inv) * SymExpr::pow(x, 2));
    SymExpr e2 = SymExpr::exp(SymExpr::num(inv) *
                              (SymExpr::pow(x, 2) - x + SymExpr::num(1)));
    SymExpr e3 = SymExpr::exp(SymExpr::num(inv) * SymExpr::pow(x - SymExpr::num(1), 2));
    SymExpr denom = SymExpr::exp(SymExpr::num(inv)) - SymExpr::num(1);
    SymExpr ratio = (e1 - SymExpr::num(2) * e2 + e3) * SymExpr::pow(denom, -1);
    return SymExpr::num(1) + ratio;
}

SymExpr sd_product(std::size_t dim, const Rational& delta) {
    std::vector<SymExpr> factors;
    for (std::size_t i = 0; i < dim; ++i) factors.push_back(sd_factor(i, delta));
    return SymExpr::mul(std::move(factors));
}

}  // namespace

BoundaryResult build_boundary(const BoundarySpec& spec) {
    if (spec.delta <= 0) throw std::invalid_argument("boundary sharpness must be positive");
    if (spec.outputs == 0) throw std::invalid_argument("output count must be positive");
    switch (spec.kind) {
        case BoundaryKind::DirichletBoxPoly: {
            auto pres = coordinate_presentation(spec.dim);
            BoundaryResult result =
                diagonal_result(box_product_expr(spec.dim), spec.outputs, false);
            attach_diagonal_operator(result, pres, box_product_poly(spec.dim), spec.outputs);
            return result;
        }
        case BoundaryKind::DirichletBoxExp:
            return exp_box_result(spec.dim, spec.delta, false, spec.outputs);
        case BoundaryKind::DirichletNeumannExp:
            return exp_box_result(spec.dim, spec.delta, true, spec.outputs);
        case BoundaryKind::DirichletBoxSd: {
            BoundaryResult result = diagonal_result(
                SymExpr::sqrt(sd_product(spec.dim, spec.delta)), spec.outputs, true);
            result.analytic = false;
            return result;
        }
        case BoundaryKind::DirichletNeumannSd: {
            BoundaryResult result =
                diagonal_result(sd_product(spec.dim, spec.delta), spec.outputs, true);
            return result;
        }
        case BoundaryKind::Codim2Axis:
            return codim2_axis(spec.codim2_variant, spec.delta);
        case BoundaryKind::Implicit: {
            if (spec.preset == "double-drop") {
                auto pres = double_drop_presentation();
                CommPoly f = double_drop_poly();
                BoundaryResult result = diagonal_result(pres->realize(f, VarBlock::X),
                                                        spec.outputs, false);
                attach_diagonal_operator(result, pres, f, spec.outputs);
                return result;
            }
            if (spec.preset == "snake") {
                auto pres = snake_presentation();
                CommPoly f = snake_poly();
                BoundaryResult result = diagonal_result(pres->realize(f, VarBlock::X),
                                                        spec.outputs, false);
                attach_diagonal_operator(result, pres, f, spec.outputs);
                return result;
            }
            if (!spec.preset.empty())
                throw std::invalid_argument("unknown boundary preset '" + spec.preset + "'");
            if (!spec.implicit_f)
                throw std::invalid_argument("implicit boundary requires a function");
            return diagonal_result(*spec.implicit_f, spec.outputs, true);
        }
    }
    throw std::logic_error("unhandled boundary kind");
}

BoundaryResult codim2_axis(const std::string& variant, const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("boundary sharpness must be positive");
    Rational inv = Rational(-1) / delta;
    SymExpr x = coord(0), y = coord(1);
    BoundaryResult result;
    if (variant == "two-abs") {
        result.entries = {{SymExpr::num(1) - SymExpr::exp(SymExpr::num(inv) * SymExpr::abs(x)),
                           SymExpr::num(1) - SymExpr::exp(SymExpr::num(inv) * SymExpr::abs(y))}};
        result.numeric_only = true;
        result.analytic = false;
        return result;
    }
    if (variant == "radial") {
        SymExpr radius = SymExpr::sqrt(SymExpr::pow(x, 2) + SymExpr::pow(y, 2));
        result.entries = {{SymExpr::num(1) - SymExpr::exp(SymExpr::num(inv) * radius)}};
        result.numeric_only = true;
        result.analytic = false;
        return result;
    }
    if (variant != "analytic")
        throw std::invalid_argument("unknown codim2 variant '" + variant + "'");

    SymExpr arg = SymExpr::num(inv) * (SymExpr::pow(x, 2) + SymExpr::pow(y, 2));
    result.entries = {{SymExpr::num(1) - SymExpr::exp(arg)}};

    // Presentation {x, y, z, E} with E = exp(-(x^2+y^2)/delta).
    const std::size_t r = 4, d = 3;
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(d, CommPoly(r)));
    for (std::size_t i = 0; i < 3; ++i) table[i][i] = CommPoly(r, Rational(1));
    CommPoly E = CommPoly::variable(r, 3);
    table[3][0] = CommPoly::variable(r, 0) * E * (Rational(2) * inv);
    table[3][1] = CommPoly::variable(r, 1) * E * (Rational(2) * inv);
    auto pres = std::make_shared<Presentation>(
        std::vector<std::string>{"x", "y", "z", "E"},
        std::vector<std::string>{"dx", "dy", "dz"}, table);
    pres->set_realizations({x, y, coord(2), SymExpr::exp(arg)});

    auto ord = MonomialOrdering::unit_degrevlex(r, d);
    OperatorMatrix op(pres, ord, 1, 1);
    op.set(0, 0, OrePoly::from_coeff(pres, ord, CommPoly(r, Rational(1)) - E));
    result.op = std::move(op);
    result.presentation = pres;
    return result;
}

CommPoly double_drop_poly() {
    const std::size_t r = 4;
    CommPoly y = CommPoly::variable(r, 1);
    CommPoly s = CommPoly::variable(r, 2);
    return y * y - s * s * s * s;
}

CommPoly snake_poly() {
    const std::size_t r = 7;
    CommPoly x = CommPoly::variable(r, 0);
    CommPoly y = CommPoly::variable(r, 1);
    CommPoly sy = CommPoly::variable(r, 4);
    CommPoly pi = CommPoly::variable(r, 6);
    CommPoly half_pi = pi * Rational(1, 2);
    CommPoly lhs = x - sy * Rational(3);
    return (y - half_pi) * (y + half_pi) * lhs * (lhs - CommPoly(r, Rational(2)));
}

std::vector<std::pair<double, double>> double_drop_box() {
    return {{0.0, M_PI}, {-1.0, 1.0}};
}

std::vector<std::pair<double, double>> snake_box() {
    return {{-3.0, 5.0}, {-M_PI / 2, M_PI / 2}};
}

bool double_drop_inside(const std::vector<double>& point, double tolerance) {
    double s = std::sin(point[0]);
    return point[1] * point[1] - s * s * s * s <= tolerance;
}

bool snake_inside(const std::vector<double>& point, double tolerance) {
    double s = 3.0 * std::sin(point[1]);
    return (point[0] - s) * (point[0] - s - 2.0) <= tolerance &&
           std::abs(point[1]) <= M_PI / 2 + tolerance;
}

}  // namespace weylgp
