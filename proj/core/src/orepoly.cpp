#include "weylgp/orepoly.hpp"

#include <sstream>
#include <stdexcept>

namespace weylgp {

namespace detail {
thread_local unsigned long long commutation_steps = 0;
}

OrePoly::OrePoly(PresentationPtr pres, MonomialOrdering ord, std::uint32_t rank)
    : pres_(std::move(pres)), ord_(std::move(ord)), rank_(rank), terms_(TermGreater{ord_}) {
    if (!pres_) throw std::invalid_argument("null presentation");
    if (rank_ == 0) throw std::invalid_argument("module rank must be positive");
}

OrePoly OrePoly::zero(PresentationPtr pres, MonomialOrdering ord, std::uint32_t rank) {
    return OrePoly(std::move(pres), std::move(ord), rank);
}

OrePoly OrePoly::constant(PresentationPtr pres, MonomialOrdering ord, const Rational& c) {
    OrePoly p(std::move(pres), std::move(ord));
    OreMonomial one;
    one.alpha = Exponents(p.pres_->gen_count(), 0);
    one.beta = Exponents(p.pres_->deriv_count(), 0);
    p.add_term(one, c);
    return p;
}

OrePoly OrePoly::monomial(PresentationPtr pres, MonomialOrdering ord, OreMonomial m,
                          const Rational& c, std::uint32_t rank) {
    OrePoly p(std::move(pres), std::move(ord), rank);
    p.add_term(m, c);
    return p;
}

OrePoly OrePoly::partial(PresentationPtr pres, MonomialOrdering ord, std::size_t j) {
    if (j >= pres->deriv_count()) throw std::out_of_range("derivation index out of range");
    OreMonomial m;
    m.alpha = Exponents(pres->gen_count(), 0);
    m.beta = Exponents(pres->deriv_count(), 0);
    m.beta[j] = 1;
    return monomial(std::move(pres), std::move(ord), std::move(m), Rational(1));
}

OrePoly OrePoly::generator(PresentationPtr pres, MonomialOrdering ord, std::size_t i) {
    if (i >= pres->gen_count()) throw std::out_of_range("generator index out of range");
    OreMonomial m;
    m.alpha = Exponents(pres->gen_count(), 0);
    m.beta = Exponents(pres->deriv_count(), 0);
    m.alpha[i] = 1;
    return monomial(std::move(pres), std::move(ord), std::move(m), Rational(1));
}

OrePoly OrePoly::from_coeff(PresentationPtr pres, MonomialOrdering ord, const CommPoly& p) {
    if (p.nvars() != pres->gen_count())
        throw std::invalid_argument("coefficient polynomial over wrong generator count");
    OrePoly result(std::move(pres), std::move(ord));
    const std::size_t d = result.pres_->deriv_count();
    for (const auto& [e, c] : p.terms()) {
        OreMonomial m;
        m.alpha = e;
        m.beta = Exponents(d, 0);
        result.add_term(m, c);
    }
    return result;
}

std::pair<OreMonomial, Rational> OrePoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero element");
    return *terms_.begin();
}

const OreMonomial& OrePoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of the zero element");
    return terms_.begin()->first;
}

std::uint32_t OrePoly::max_beta_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.beta_degree());
    return deg;
}

std::uint32_t OrePoly::max_alpha_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.alpha_degree());
    return deg;
}

void OrePoly::add_term(const OreMonomial& m, const Rational& c) {
    if (m.alpha.size() != pres_->gen_count() || m.beta.size() != pres_->deriv_count())
        throw std::invalid_argument("monomial over wrong ring");
    if (m.component < 1 || m.component > rank_)
        throw std::invalid_argument("monomial component out of range");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void OrePoly::check_same_space(const OrePoly& other) const {
    if (!pres_->compatible(*other.pres_)) throw std::invalid_argument("presentation mismatch");
    if (rank_ != other.rank_) throw std::invalid_argument("module rank mismatch");
}

OrePoly OrePoly::operator-() const {
    OrePoly result(pres_, ord_, rank_);
    for (const auto& [m, c] : terms_) result.terms_.emplace(m, -c);
    return result;
}

OrePoly OrePoly::operator+(const OrePoly& other) const {
    check_same_space(other);
    OrePoly result = *this;
    for (const auto& [m, c] : other.terms_) result.add_term(m, c);
    return result;
}

OrePoly OrePoly::operator-(const OrePoly& other) const {
    check_same_space(other);
    OrePoly result = *this;
    for (const auto& [m, c] : other.terms_) result.add_term(m, -c);
    return result;
}

OrePoly OrePoly::operator*(const Rational& scalar) const {
    OrePoly result(pres_, ord_, rank_);
    if (scalar == 0) return result;
    for (const auto& [m, c] : terms_) result.terms_.emplace(m, c * scalar);
    return result;
}

OrePoly OrePoly::partial_left(std::size_t j) const {
    OrePoly result(pres_, ord_, rank_);
    for (const auto& [m, c] : terms_) {
        ++detail::commutation_steps;
        OreMonomial shifted = m;
        shifted.beta[j] += 1;
        result.add_term(shifted, c);
        // Commutator part: delta_j applied to the coefficient monomial.
        CommPoly mono = CommPoly::monomial(m.alpha, Rational(1));
        CommPoly dm = pres_->derive(mono, j);
        for (const auto& [e, g] : dm.terms()) {
            OreMonomial t = m;
            t.alpha = e;
            result.add_term(t, c * g);
        }
    }
    return result;
}

OrePoly OrePoly::multiply(const OrePoly& other) const {
    if (rank_ != 1) throw std::invalid_argument("left factor of a product must be scalar");
    if (!pres_->compatible(*other.pres_)) throw std::invalid_argument("presentation mismatch");
    OrePoly result(pres_, ord_, other.rank_);
    for (const auto& [m, c] : terms_) {
        OrePoly acted = other;
        for (std::size_t j = 0; j < m.beta.size(); ++j)
            for (std::uint32_t k = 0; k < m.beta[j]; ++k) acted = acted.partial_left(j);
        // Left multiplication by f^alpha only shifts exponents.
        for (const auto& [am, ac] : acted.terms_) {
            OreMonomial t = am;
            for (std::size_t i = 0; i < m.alpha.size(); ++i) t.alpha[i] += m.alpha[i];
            result.add_term(t, c * ac);
        }
    }
    return result;
}

OrePoly OrePoly::theta() const {
    if (rank_ != 1) throw std::invalid_argument("involution applies to scalar elements");
    OrePoly result(pres_, ord_);
    for (const auto& [m, c] : terms_) {
        // theta(c f^a d^b) = c (-1)^|b| d^b f^a, renormalized.
        OreMonomial dpart;
        dpart.alpha = Exponents(pres_->gen_count(), 0);
        dpart.beta = m.beta;
        OreMonomial fpart;
        fpart.alpha = m.alpha;
        fpart.beta = Exponents(pres_->deriv_count(), 0);
        Rational sign = (m.beta_degree() % 2 == 0) ? Rational(1) : Rational(-1);
        OrePoly prod = monomial(pres_, ord_, dpart, c * sign)
                           .multiply(monomial(pres_, ord_, fpart, Rational(1)));
        result = result + prod;
    }
    return result;
}

OrePoly OrePoly::with_ordering(const MonomialOrdering& ord) const {
    if (ord.same_as(ord_)) return *this;
    OrePoly result(pres_, ord, rank_);
    for (const auto& [m, c] : terms_) result.terms_.emplace(m, c);
    return result;
}

bool OrePoly::equals(const OrePoly& other) const {
    if (!pres_->compatible(*other.pres_) || rank_ != other.rank_) return false;
    if (terms_.size() != other.terms_.size()) return false;
    std::map<OreMonomial, Rational, OreMonomialLess> a, b;
    for (const auto& [m, c] : terms_) a.emplace(m, c);
    for (const auto& [m, c] : other.terms_) b.emplace(m, c);
    return a == b;
}

OrePoly OrePoly::normalized() const {
    if (terms_.empty()) return *this;
    std::vector<Rational> coeffs;
    coeffs.reserve(terms_.size());
    for (const auto& [m, c] : terms_) coeffs.push_back(c);
    Rational divisor = content(coeffs);
    if (leading_term().second < 0) divisor = -divisor;
    OrePoly result(pres_, ord_, rank_);
    for (const auto& [m, c] : terms_) result.terms_.emplace(m, c / divisor);
    return result;
}

OrePoly OrePoly::component_part(std::uint32_t component) const {
    OrePoly result(pres_, ord_, 1);
    for (const auto& [m, c] : terms_) {
        if (m.component != component) continue;
        OreMonomial t = m;
        t.component = 1;
        result.terms_.emplace(t, c);
    }
    return result;
}

OrePoly OrePoly::embedded(std::uint32_t component, std::uint32_t rank) const {
    if (rank_ != 1) throw std::invalid_argument("only scalar elements can be embedded");
    if (component < 1 || component > rank) throw std::out_of_range("component out of range");
    OrePoly result(pres_, ord_, rank);
    for (const auto& [m, c] : terms_) {
        OreMonomial t = m;
        t.component = component;
        result.terms_.emplace(t, c);
    }
    return result;
}

OrePoly OrePoly::shifted_components(std::int64_t offset, std::uint32_t new_rank) const {
    OrePoly result(pres_, ord_, new_rank);
    for (const auto& [m, c] : terms_) {
        OreMonomial t = m;
        std::int64_t comp = static_cast<std::int64_t>(m.component) + offset;
        if (comp < 1 || comp > static_cast<std::int64_t>(new_rank))
            throw std::out_of_range("component shift out of range");
        t.component = static_cast<std::uint32_t>(comp);
        result.terms_.emplace(t, c);
    }
    return result;
}

std::string OrePoly::to_string() const {
    if (terms_.empty()) return "0";
    const auto& gnames = pres_->generator_names();
    const auto& dnames = pres_->derivation_names();
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
        std::ostringstream factors;
        bool any = false;
        for (std::size_t i = 0; i < m.alpha.size(); ++i) {
            if (m.alpha[i] == 0) continue;
            if (any) factors << "*";
            factors << gnames[i];
            if (m.alpha[i] > 1) factors << "^" << m.alpha[i];
            any = true;
        }
        for (std::size_t j = 0; j < m.beta.size(); ++j) {
            if (m.beta[j] == 0) continue;
            if (any) factors << "*";
            factors << dnames[j];
            if (m.beta[j] > 1) factors << "^" << m.beta[j];
            any = true;
        }
        if (!any) {
            out << weylgp::to_string(a);
        } else {
            if (a != 1) out << weylgp::to_string(a) << "*";
            out << factors.str();
        }
        if (rank_ > 1) out << "@e" << m.component;
    }
    return out.str();
}

}  // namespace weylgp
