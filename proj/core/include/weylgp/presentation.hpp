#ifndef WEYLGP_PRESENTATION_HPP
#define WEYLGP_PRESENTATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylgp/commpoly.hpp"
#include "weylgp/symexpr.hpp"

namespace weylgp {

/// Outcome of Presentation::validate. Failures are reported, not thrown.
struct ValidationReport {
    bool ok = true;
    // First violated commutativity triple (generator i, derivations j < l),
    // 1-based, meaningful only when ok is false.
    std::size_t gen_index = 0;
    std::size_t deriv_j = 0;
    std::size_t deriv_l = 0;
    std::string message;
};

/// Finitely presented differential algebra of analytic coefficient functions:
/// r generators f_1..f_r, d commuting derivations, and the derivation table
/// entries g_{i,j} (polynomials in the generators) giving the action of the
/// j-th derivation on the i-th generator.
class Presentation {
  public:
    Presentation(std::vector<std::string> generator_names,
                 std::vector<std::string> derivation_names,
                 std::vector<std::vector<CommPoly>> derivation_table);

    std::size_t gen_count() const { return generator_names_.size(); }
    std::size_t deriv_count() const { return derivation_names_.size(); }

    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<std::string>& derivation_names() const { return derivation_names_; }

    /// g_{i,j} with 0-based indices.
    const CommPoly& table(std::size_t i, std::size_t j) const;

    bool has_realizations() const { return !realizations_.empty(); }
    void set_realizations(std::vector<SymExpr> realizations);
    const std::vector<SymExpr>& realizations() const;

    /// Applies the j-th derivation (0-based) to a coefficient polynomial by
    /// the chain rule through the table. Exact.
    CommPoly derive(const CommPoly& p, std::size_t j) const;

    /// Checks the pairwise commutativity of the derivations on every
    /// generator by exact polynomial identity.
    ValidationReport validate() const;

    bool compatible(const Presentation& other) const;

    /// Realizes a coefficient polynomial as a symbolic expression in the
    /// chosen variable block. Requires realizations.
    SymExpr realize(const CommPoly& p, VarBlock block) const;

  private:
    std::vector<std::string> generator_names_;
    std::vector<std::string> derivation_names_;
    std::vector<std::vector<CommPoly>> table_;  // [i][j]
    std::vector<SymExpr> realizations_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Pure Weyl algebra over the rationals: r = 0, the given number of partials.
PresentationPtr weyl_presentation(std::size_t dim);

/// Coordinate polynomial algebra: generators x_1..x_d with dx_i x_j = delta_ij
/// and coordinate realizations.
PresentationPtr coordinate_presentation(std::size_t dim);

/// Stock presentation for the sinusoidal plane examples:
/// generators {x, y, sin, cos} over (dx, dy) with sin' = cos, cos' = -sin
/// in x and vanishing y-derivatives, plus realizations.
PresentationPtr double_drop_presentation();

/// Stock presentation {x, y, sx, cx, sy, cy, pi} for the sinusoidal channel:
/// sine/cosine generators in each coordinate and the constant pi (all of its
/// derivatives vanish), plus realizations.
PresentationPtr snake_presentation();

/// Presentation of Q{x, y, exp(x^2+y^2-1)} with its realizations.
PresentationPtr exp_circle_presentation();

}  // namespace weylgp

#endif
