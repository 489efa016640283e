#include "weylgp/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace weylgp {

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<std::string> derivation_names,
                           std::vector<std::vector<CommPoly>> derivation_table)
    : generator_names_(std::move(generator_names)),
      derivation_names_(std::move(derivation_names)),
      table_(std::move(derivation_table)) {
    const std::size_t r = generator_names_.size();
    const std::size_t d = derivation_names_.size();
    if (table_.size() != r)
        throw std::invalid_argument("derivation table must have one row per generator");
    for (const auto& row : table_) {
        if (row.size() != d)
            throw std::invalid_argument("derivation table row length must equal derivation count");
        for (const auto& g : row)
            if (g.nvars() != r)
                throw std::invalid_argument("table entry over wrong generator count");
    }
}

const CommPoly& Presentation::table(std::size_t i, std::size_t j) const {
    if (i >= gen_count() || j >= deriv_count())
        throw std::out_of_range("derivation table index out of range");
    return table_[i][j];
}

void Presentation::set_realizations(std::vector<SymExpr> realizations) {
    if (realizations.size() != gen_count())
        throw std::invalid_argument("one realization per generator required");
    realizations_ = std::move(realizations);
}

const std::vector<SymExpr>& Presentation::realizations() const {
    if (realizations_.empty() && gen_count() > 0)
        throw std::logic_error("presentation carries no realizations");
    return realizations_;
}

CommPoly Presentation::derive(const CommPoly& p, std::size_t j) const {
    if (j >= deriv_count()) throw std::out_of_range("derivation index out of range");
    CommPoly result(gen_count());
    for (std::size_t i = 0; i < gen_count(); ++i) {
        CommPoly dp = p.partial(i);
        if (dp.is_zero()) continue;
        result = result + dp * table_[i][j];
    }
    return result;
}

ValidationReport Presentation::validate() const {
    ValidationReport report;
    const std::size_t r = gen_count();
    const std::size_t d = deriv_count();
    for (std::size_t i = 0; i < r; ++i) {
        CommPoly fi = CommPoly::variable(r, i);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = j + 1; l < d; ++l) {
                CommPoly lhs = derive(derive(fi, j), l);
                CommPoly rhs = derive(derive(fi, l), j);
                if (lhs != rhs) {
                    report.ok = false;
                    report.gen_index = i + 1;
                    report.deriv_j = j + 1;
                    report.deriv_l = l + 1;
                    std::ostringstream msg;
                    msg << "derivations " << derivation_names_[j] << " and "
                        << derivation_names_[l] << " do not commute on generator "
                        << generator_names_[i];
                    report.message = msg.str();
                    return report;
                }
            }
        }
    }
    return report;
}

bool Presentation::compatible(const Presentation& other) const {
    if (this == &other) return true;
    return gen_count() == other.gen_count() && deriv_count() == other.deriv_count() &&
           table_ == other.table_;
}

SymExpr Presentation::realize(const CommPoly& p, VarBlock block) const {
    const auto& reals = realizations();
    std::vector<SymExpr> terms;
    for (const auto& [e, c] : p.terms()) {
        std::vector<SymExpr> factors;
        factors.push_back(SymExpr::num(c));
        for (std::size_t i = 0; i < gen_count(); ++i)
            if (e[i] > 0)
                factors.push_back(SymExpr::pow(reals[i].with_block(block), static_cast<long>(e[i])));
        terms.push_back(SymExpr::mul(std::move(factors)));
    }
    return SymExpr::add(std::move(terms));
}

PresentationPtr weyl_presentation(std::size_t dim) {
    std::vector<std::string> derivs;
    for (std::size_t j = 0; j < dim; ++j) derivs.push_back("d" + std::to_string(j + 1));
    if (dim == 1) derivs = {"dx"};
    if (dim == 2) derivs = {"dx", "dy"};
    if (dim == 3) derivs = {"dx", "dy", "dz"};
    return std::make_shared<Presentation>(std::vector<std::string>{}, derivs,
                                          std::vector<std::vector<CommPoly>>{});
}

PresentationPtr coordinate_presentation(std::size_t dim) {
    std::vector<std::string> gens, derivs;
    for (std::size_t i = 0; i < dim; ++i) {
        std::string base = dim <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1);
        gens.push_back(base);
        derivs.push_back("d" + base);
    }
    std::vector<std::vector<CommPoly>> table(dim, std::vector<CommPoly>(dim, CommPoly(dim)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            table[i][j] = CommPoly(dim, Rational(i == j ? 1 : 0));
    auto pres = std::make_shared<Presentation>(gens, derivs, table);
    std::vector<SymExpr> reals;
    for (std::size_t i = 0; i < dim; ++i) reals.push_back(SymExpr::var(VarBlock::X, i));
    pres->set_realizations(std::move(reals));
    return pres;
}

PresentationPtr double_drop_presentation() {
    const std::size_t r = 4, d = 2;
    std::vector<std::string> gens = {"x", "y", "sin", "cos"};
    std::vector<std::string> derivs = {"dx", "dy"};
    auto zero = CommPoly(r);
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(d, zero));
    table[0][0] = CommPoly(r, Rational(1));          // dx x = 1
    table[1][1] = CommPoly(r, Rational(1));          // dy y = 1
    table[2][0] = CommPoly::variable(r, 3);          // dx sin = cos
    table[3][0] = -CommPoly::variable(r, 2);         // dx cos = -sin
    auto pres = std::make_shared<Presentation>(gens, derivs, table);
    SymExpr x = SymExpr::var(VarBlock::X, 0);
    SymExpr y = SymExpr::var(VarBlock::X, 1);
    pres->set_realizations({x, y, SymExpr::sin(x), SymExpr::cos(x)});
    return pres;
}

PresentationPtr snake_presentation() {
    const std::size_t r = 7, d = 2;
    std::vector<std::string> gens = {"x", "y", "sx", "cx", "sy", "cy", "pi"};
    std::vector<std::string> derivs = {"dx", "dy"};
    auto zero = CommPoly(r);
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(d, zero));
    table[0][0] = CommPoly(r, Rational(1));
    table[1][1] = CommPoly(r, Rational(1));
    table[2][0] = CommPoly::variable(r, 3);   // dx sx = cx
    table[3][0] = -CommPoly::variable(r, 2);  // dx cx = -sx
    table[4][1] = CommPoly::variable(r, 5);   // dy sy = cy
    table[5][1] = -CommPoly::variable(r, 4);  // dy cy = -sy
    auto pres = std::make_shared<Presentation>(gens, derivs, table);
    SymExpr x = SymExpr::var(VarBlock::X, 0);
    SymExpr y = SymExpr::var(VarBlock::X, 1);
    pres->set_realizations({x, y, SymExpr::sin(x), SymExpr::cos(x), SymExpr::sin(y),
                            SymExpr::cos(y), SymExpr::pi()});
    return pres;
}

PresentationPtr exp_circle_presentation() {
    const std::size_t r = 3, d = 2;
    std::vector<std::string> gens = {"x", "y", "E"};
    std::vector<std::string> derivs = {"dx", "dy"};
    auto zero = CommPoly(r);
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(d, zero));
    table[0][0] = CommPoly(r, Rational(1));
    table[1][1] = CommPoly(r, Rational(1));
    // dx E = 2 x E, dy E = 2 y E for E = exp(x^2 + y^2 - 1).
    table[2][0] = CommPoly::variable(r, 0) * CommPoly::variable(r, 2) * Rational(2);
    table[2][1] = CommPoly::variable(r, 1) * CommPoly::variable(r, 2) * Rational(2);
    auto pres = std::make_shared<Presentation>(gens, derivs, table);
    SymExpr x = SymExpr::var(VarBlock::X, 0);
    SymExpr y = SymExpr::var(VarBlock::X, 1);
    SymExpr arg = SymExpr::pow(x, 2) + SymExpr::pow(y, 2) + SymExpr::num(-1);
    pres->set_realizations({x, y, SymExpr::exp(arg)});
    return pres;
}

}  // namespace weylgp
