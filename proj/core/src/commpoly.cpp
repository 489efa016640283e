#include "weylgp/commpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weylgp {

CommPoly::CommPoly(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
    if (constant != 0) terms_.emplace(Exponents(nvars, 0), constant);
}

CommPoly CommPoly::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    if (index >= nvars) throw std::out_of_range("generator index out of range");
    Exponents e(nvars, 0);
    e[index] = power;
    return monomial(std::move(e), Rational(1));
}

CommPoly CommPoly::monomial(Exponents exps, const Rational& coeff) {
    CommPoly p(exps.size());
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool CommPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rational CommPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (exps.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else if (coeff == 0) {
        terms_.erase(it);
    }
}

std::uint32_t CommPoly::total_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t d = 0;
        for (auto x : e) d += x;
        if (d > deg) deg = d;
    }
    return deg;
}

std::uint32_t CommPoly::degree_in(std::size_t index) const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_)
        if (e[index] > deg) deg = e[index];
    return deg;
}

void CommPoly::check_compatible(const CommPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials over different generator counts");
}

CommPoly CommPoly::operator-() const {
    CommPoly result(nvars_);
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
    return result;
}

CommPoly CommPoly::operator+(const CommPoly& other) const {
    check_compatible(other);
    CommPoly result = *this;
    for (const auto& [e, c] : other.terms_) result.add_term(e, c);
    return result;
}

CommPoly CommPoly::operator-(const CommPoly& other) const {
    check_compatible(other);
    CommPoly result = *this;
    for (const auto& [e, c] : other.terms_) result.add_term(e, -c);
    return result;
}

CommPoly CommPoly::operator*(const CommPoly& other) const {
    check_compatible(other);
    CommPoly result(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

CommPoly CommPoly::operator*(const Rational& scalar) const {
    CommPoly result(nvars_);
    if (scalar == 0) return result;
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, c * scalar);
    return result;
}

bool CommPoly::operator==(const CommPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

CommPoly CommPoly::partial(std::size_t index) const {
    if (index >= nvars_) throw std::out_of_range("generator index out of range");
    CommPoly result(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents d = e;
        d[index] -= 1;
        result.add_term(d, c * Rational(static_cast<long>(e[index])));
    }
    return result;
}

double CommPoly::eval(const std::vector<double>& values) const {
    if (values.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = to_double(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= values[i];
        sum += term;
    }
    return sum;
}

std::string CommPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Iterate in reverse map order so higher-degree monomials tend to print first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << (i < names.size() ? names[i] : "F" + std::to_string(i + 1));
            if (e[i] > 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            out << weylgp::to_string(a);
        } else {
            if (a != 1) out << weylgp::to_string(a) << "*";
            out << vars.str();
        }
    }
    return out.str();
}

}  // namespace weylgp
