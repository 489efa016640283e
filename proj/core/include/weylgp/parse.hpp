#ifndef WEYLGP_PARSE_HPP
#define WEYLGP_PARSE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylgp/orepoly.hpp"
#include "weylgp/symexpr.hpp"

namespace weylgp {

/// Parse failure with a 1-based column index into the offending text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t column)
        : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    std::size_t column() const { return column_; }

  private:
    std::size_t column_;
};

/// Operator grammar: terms joined by + or -, a term being *-separated
/// factors: an integer or p/q coefficient, generator powers, then partial
/// powers, e.g. "2*x*sin^3*dx^2 - 1/2*dy".
OrePoly parse_operator(const std::string& text, PresentationPtr pres,
                       const MonomialOrdering& ord);

/// Same grammar restricted to generators (derivation names are rejected).
CommPoly parse_coeff_poly(const std::string& text, const Presentation& pres);

/// Analytic expression grammar with + - * / ^, parentheses, exp/sin/cos/
/// sqrt/abs, the constant pi, decimal or rational literals, and the given
/// coordinate names.
SymExpr parse_symexpr(const std::string& text, const std::map<std::string, std::size_t>& vars);

/// Coordinate name table x1..xd, plus x, y, z aliases for d <= 3.
std::map<std::string, std::size_t> coordinate_vars(std::size_t dim);

}  // namespace weylgp

#endif
