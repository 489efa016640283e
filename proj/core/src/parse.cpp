#include "weylgp/parse.hpp"

#include <cctype>

namespace weylgp {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::size_t column() { return pos + 1; }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, column()); }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return mpz_class(text.substr(start, pos - start));
    }

    /// INT, INT/INT, or a decimal literal, as an exact rational.
    Rational number() {
        mpz_class whole = integer();
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string frac = text.substr(start, pos - start);
            mpz_class den = 1;
            mpz_class num = whole;
            for (char c : frac) {
                num = num * 10 + (c - '0');
                den *= 10;
            }
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                mpz_class den = integer();
                if (den == 0) fail("zero denominator");
                Rational q(whole, den);
                q.canonicalize();
                return q;
            }
            pos = save;
        }
        return Rational(whole);
    }

    long exponent() {
        skip_ws();
        bool neg = accept('-');
        mpz_class e = integer();
        if (!e.fits_slong_p()) fail("exponent too large");
        return neg ? -e.get_si() : e.get_si();
    }
};

OrePoly parse_operator_impl(const std::string& text, PresentationPtr pres,
                            const MonomialOrdering& ord, bool allow_partials) {
    Cursor cur{text};
    const std::size_t r = pres->gen_count();
    const std::size_t d = pres->deriv_count();
    std::map<std::string, std::size_t> gen_index, deriv_index;
    for (std::size_t i = 0; i < r; ++i) gen_index[pres->generator_names()[i]] = i;
    for (std::size_t j = 0; j < d; ++j) deriv_index[pres->derivation_names()[j]] = j;

    OrePoly result = OrePoly::zero(pres, ord);
    bool expecting_term = true;
    Rational sign(1);
    while (!cur.done()) {
        if (!expecting_term) {
            if (cur.accept('+')) {
                sign = 1;
            } else if (cur.accept('-')) {
                sign = -1;
            } else {
                cur.fail("expected '+' or '-'");
            }
            expecting_term = true;
            continue;
        }
        while (cur.accept('-')) sign = -sign;
        while (cur.accept('+')) {
        }
        // One term: *-separated factors.
        Rational coeff = sign;
        OreMonomial mono;
        mono.alpha = Exponents(r, 0);
        mono.beta = Exponents(d, 0);
        bool first_factor = true;
        for (;;) {
            if (!first_factor && !cur.accept('*')) break;
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= cur.number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t name_col = cur.column();
                std::string name = cur.ident();
                long power = 1;
                if (cur.accept('^')) {
                    power = cur.exponent();
                    if (power < 0) cur.fail("negative power in a monomial");
                }
                if (auto it = gen_index.find(name); it != gen_index.end()) {
                    mono.alpha[it->second] += static_cast<std::uint32_t>(power);
                } else if (auto jt = deriv_index.find(name); jt != deriv_index.end()) {
                    if (!allow_partials)
                        throw ParseError("derivation '" + name + "' not allowed here", name_col);
                    mono.beta[jt->second] += static_cast<std::uint32_t>(power);
                } else {
                    throw ParseError("unknown name '" + name + "'", name_col);
                }
            } else if (first_factor) {
                cur.fail("expected a coefficient or a name");
            } else {
                cur.fail("expected a factor after '*'");
            }
            first_factor = false;
        }
        result.add_term(mono, coeff);
        sign = 1;
        expecting_term = false;
    }
    if (expecting_term && result.is_zero() && !text.empty()) {
        // Accept plain "0"-like inputs that produced no terms.
    }
    return result;
}

}  // namespace

OrePoly parse_operator(const std::string& text, PresentationPtr pres,
                       const MonomialOrdering& ord) {
    return parse_operator_impl(text, std::move(pres), ord, true);
}

CommPoly parse_coeff_poly(const std::string& text, const Presentation& pres) {
    auto shared = std::make_shared<Presentation>(pres);
    MonomialOrdering ord = MonomialOrdering::unit_degrevlex(pres.gen_count(), pres.deriv_count());
    OrePoly p = parse_operator_impl(text, shared, ord, false);
    CommPoly result(pres.gen_count());
    for (const auto& [m, c] : p.terms()) result.add_term(m.alpha, c);
    return result;
}

std::map<std::string, std::size_t> coordinate_vars(std::size_t dim) {
    std::map<std::string, std::size_t> vars;
    for (std::size_t i = 0; i < dim; ++i) vars["x" + std::to_string(i + 1)] = i;
    if (dim >= 1 && dim <= 3) {
        const char* names[] = {"x", "y", "z"};
        for (std::size_t i = 0; i < dim; ++i) vars[names[i]] = i;
    }
    return vars;
}

namespace {

class ExprParser {
  public:
    ExprParser(const std::string& text, const std::map<std::string, std::size_t>& vars)
        : cur_{text}, vars_(vars) {}

    SymExpr parse() {
        SymExpr e = expression();
        if (!cur_.done()) cur_.fail("unexpected trailing input");
        return e;
    }

  private:
    Cursor cur_;
    const std::map<std::string, std::size_t>& vars_;

    SymExpr expression() {
        std::vector<SymExpr> terms;
        bool negate = leading_sign();
        terms.push_back(negate ? -term() : term());
        for (;;) {
            if (cur_.accept('+')) {
                terms.push_back(term());
            } else if (cur_.accept('-')) {
                terms.push_back(-term());
            } else {
                break;
            }
        }
        return SymExpr::add(std::move(terms));
    }

    bool leading_sign() {
        bool negate = false;
        for (;;) {
            if (cur_.accept('-'))
                negate = !negate;
            else if (cur_.accept('+')) {
            } else {
                return negate;
            }
        }
    }

    SymExpr term() {
        std::vector<SymExpr> factors{power()};
        for (;;) {
            if (cur_.accept('*')) {
                factors.push_back(power());
            } else if (cur_.accept('/')) {
                factors.push_back(SymExpr::pow(power(), -1));
            } else {
                break;
            }
        }
        return SymExpr::mul(std::move(factors));
    }

    SymExpr power() {
        SymExpr base = atom();
        if (cur_.accept('^')) {
            long e = cur_.exponent();
            return SymExpr::pow(base, e);
        }
        return base;
    }

    SymExpr atom() {
        char c = cur_.peek();
        if (c == '(') {
            cur_.accept('(');
            SymExpr e = expression();
            if (!cur_.accept(')')) cur_.fail("expected ')'");
            return e;
        }
        if (c == '-') {
            cur_.accept('-');
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SymExpr::num(cur_.number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t col = cur_.column();
            std::string name = cur_.ident();
            if (cur_.peek() == '(') {
                cur_.accept('(');
                SymExpr arg = expression();
                if (!cur_.accept(')')) cur_.fail("expected ')'");
                if (name == "exp") return SymExpr::exp(arg);
                if (name == "sin") return SymExpr::sin(arg);
                if (name == "cos") return SymExpr::cos(arg);
                if (name == "sqrt") return SymExpr::sqrt(arg);
                if (name == "abs") return SymExpr::abs(arg);
                throw ParseError("unknown function '" + name + "'", col);
            }
            if (name == "pi") return SymExpr::pi();
            if (auto it = vars_.find(name); it != vars_.end())
                return SymExpr::var(VarBlock::X, it->second);
            throw ParseError("unknown variable '" + name + "'", col);
        }
        cur_.fail("expected an expression");
    }
};

}  // namespace

SymExpr parse_symexpr(const std::string& text, const std::map<std::string, std::size_t>& vars) {
    return ExprParser(text, vars).parse();
}

}  // namespace weylgp
