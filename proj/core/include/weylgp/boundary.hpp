#ifndef WEYLGP_BOUNDARY_HPP
#define WEYLGP_BOUNDARY_HPP

#include <optional>
#include <string>
#include <vector>

#include "weylgp/opmatrix.hpp"
#include "weylgp/symexpr.hpp"

namespace weylgp {

enum class BoundaryKind {
    DirichletBoxPoly,
    DirichletBoxExp,
    DirichletBoxSd,
    DirichletNeumannExp,
    DirichletNeumannSd,
    Codim2Axis,
    Implicit,
};

BoundaryKind boundary_kind_from_string(const std::string& name);
std::string to_string(BoundaryKind kind);

/// Requested boundary parametrization. Box kinds live on [0,1]^dim; the
/// codim2 kinds on R^3 vanishing on the z-axis; Implicit uses a named preset
/// region or a custom expression.
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::DirichletBoxExp;
    std::size_t dim = 1;
    Rational delta = Rational(1, 100);  // sharpness, must be positive
    std::size_t outputs = 1;            // ell for diagonal kinds
    std::string preset;                 // "double-drop" or "snake" for Implicit
    std::optional<SymExpr> implicit_f;  // custom Implicit boundary function
    std::string codim2_variant = "analytic";  // "two-abs", "radial", "analytic"
};

/// Constructed parametrization: multiplication operators as expressions, and
/// as exact operators over a presentation with realizations whenever the
/// entries are elements of a presentable algebra. Square-root based variants
/// are numeric-only and carry no operator matrix.
struct BoundaryResult {
    std::vector<std::vector<SymExpr>> entries;  // ell x ell diagonal or 1 x m row
    bool numeric_only = false;
    bool analytic = true;
    std::optional<OperatorMatrix> op;
    PresentationPtr presentation;  // set when op is present
};

BoundaryResult build_boundary(const BoundarySpec& spec);

/// The three z-axis rows: variant "two-abs" (1x2, not analytic),
/// "radial" (1x1, not analytic), "analytic" (1x1, analytic).
BoundaryResult codim2_axis(const std::string& variant, const Rational& delta);

/// y^2 - sin(x)^4 over the {x, y, sin, cos} presentation.
CommPoly double_drop_poly();
/// (y - pi/2)(y + pi/2)(x - 3 sin y)(x - 3 sin y - 2) over the snake
/// presentation.
CommPoly snake_poly();

/// Axis-aligned evaluation boxes of the two shipped regions.
std::vector<std::pair<double, double>> double_drop_box();
std::vector<std::pair<double, double>> snake_box();

/// Interior test of the shipped regions (nonpositive boundary polynomial).
bool double_drop_inside(const std::vector<double>& point, double tolerance = 0.0);
bool snake_inside(const std::vector<double>& point, double tolerance = 0.0);

}  // namespace weylgp

#endif
