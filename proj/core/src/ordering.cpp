#include "weylgp/ordering.hpp"

#include <sstream>
#include <stdexcept>

namespace weylgp {

bool OreMonomial::is_unit() const {
    for (auto a : alpha)
        if (a) return false;
    for (auto b : beta)
        if (b) return false;
    return true;
}

std::uint32_t OreMonomial::alpha_degree() const {
    std::uint32_t deg = 0;
    for (auto a : alpha) deg += a;
    return deg;
}

std::uint32_t OreMonomial::beta_degree() const {
    std::uint32_t deg = 0;
    for (auto b : beta) deg += b;
    return deg;
}

OreMonomial OreMonomial::times(const OreMonomial& other) const {
    if (alpha.size() != other.alpha.size() || beta.size() != other.beta.size())
        throw std::invalid_argument("monomials over different rings");
    OreMonomial m = other;
    for (std::size_t i = 0; i < alpha.size(); ++i) m.alpha[i] += alpha[i];
    for (std::size_t j = 0; j < beta.size(); ++j) m.beta[j] += beta[j];
    return m;
}

bool OreMonomial::divides(const OreMonomial& other) const {
    if (component != other.component) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > other.alpha[i]) return false;
    for (std::size_t j = 0; j < beta.size(); ++j)
        if (beta[j] > other.beta[j]) return false;
    return true;
}

Exponents OreMonomial::epsilon() const {
    Exponents e;
    e.reserve(beta.size() + alpha.size());
    e.insert(e.end(), beta.begin(), beta.end());
    e.insert(e.end(), alpha.begin(), alpha.end());
    return e;
}

bool OreMonomialLess::operator()(const OreMonomial& a, const OreMonomial& b) const {
    if (a.component != b.component) return a.component < b.component;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.alpha < b.alpha;
}

struct MonomialOrdering::Impl {
    Kind kind;
    std::vector<Rational> weights;                       // WDegRevLex
    std::shared_ptr<const Impl> base1, base2;            // module kinds
    std::size_t split = 0;                               // ElimComponents
};

namespace {

using Impl = MonomialOrdering::Impl;

// Degree first, then the reversed exponent tuple compared lexicographically
// with the greater tuple winning. alpha/beta are concatenated (f's, then d's).
int compare_revlex_tail(const Exponents& av, const Exponents& bv) {
    for (std::size_t k = av.size(); k-- > 0;) {
        if (av[k] != bv[k]) return av[k] > bv[k] ? 1 : -1;
    }
    return 0;
}

int compare_wdegrevlex(const std::vector<Rational>& weights, const OreMonomial& a,
                       const OreMonomial& b) {
    Exponents av, bv;
    av.reserve(a.alpha.size() + a.beta.size());
    bv.reserve(av.capacity());
    av.insert(av.end(), a.alpha.begin(), a.alpha.end());
    av.insert(av.end(), a.beta.begin(), a.beta.end());
    bv.insert(bv.end(), b.alpha.begin(), b.alpha.end());
    bv.insert(bv.end(), b.beta.begin(), b.beta.end());
    if (av.size() != bv.size()) throw std::invalid_argument("monomials over different rings");
    if (weights.size() != av.size())
        throw std::invalid_argument("weight vector length must be r + d");
    Rational da(0), db(0);
    for (std::size_t k = 0; k < av.size(); ++k) {
        da += weights[k] * Rational(static_cast<long>(av[k]));
        db += weights[k] * Rational(static_cast<long>(bv[k]));
    }
    int c = cmp(da, db);
    if (c != 0) return c;
    return compare_revlex_tail(av, bv);
}

int compare_block_degrevlex(const Exponents& av, const Exponents& bv) {
    std::uint32_t da = 0, db = 0;
    for (auto v : av) da += v;
    for (auto v : bv) db += v;
    if (da != db) return da > db ? 1 : -1;
    return compare_revlex_tail(av, bv);
}

int compare_impl(const Impl& impl, const OreMonomial& a, const OreMonomial& b);

int compare_scalar_part(const Impl& impl, const OreMonomial& a, const OreMonomial& b) {
    OreMonomial as = a, bs = b;
    as.component = bs.component = 1;
    return compare_impl(impl, as, bs);
}

int compare_impl(const Impl& impl, const OreMonomial& a, const OreMonomial& b) {
    switch (impl.kind) {
        case MonomialOrdering::Kind::WDegRevLex:
            return compare_wdegrevlex(impl.weights, a, b);
        case MonomialOrdering::Kind::ElimPartials: {
            int c = compare_block_degrevlex(a.beta, b.beta);
            if (c != 0) return c;
            return compare_block_degrevlex(a.alpha, b.alpha);
        }
        case MonomialOrdering::Kind::Top: {
            int c = compare_scalar_part(*impl.base1, a, b);
            if (c != 0) return c;
            if (a.component != b.component) return a.component < b.component ? 1 : -1;
            return 0;
        }
        case MonomialOrdering::Kind::Pot: {
            if (a.component != b.component) return a.component < b.component ? 1 : -1;
            return compare_scalar_part(*impl.base1, a, b);
        }
        case MonomialOrdering::Kind::ElimComponents: {
            const bool a_first = a.component <= impl.split;
            const bool b_first = b.component <= impl.split;
            if (a_first != b_first) return a_first ? 1 : -1;
            if (a_first) return compare_impl(*impl.base1, a, b);
            OreMonomial as = a, bs = b;
            as.component -= static_cast<std::uint32_t>(impl.split);
            bs.component -= static_cast<std::uint32_t>(impl.split);
            return compare_impl(*impl.base2, as, bs);
        }
    }
    throw std::logic_error("unhandled ordering kind");
}

}  // namespace

MonomialOrdering MonomialOrdering::wdegrevlex(std::vector<Rational> weights) {
    for (const auto& w : weights)
        if (w <= 0) throw std::invalid_argument("ordering weights must be strictly positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::WDegRevLex;
    impl->weights = std::move(weights);
    return MonomialOrdering(impl);
}

MonomialOrdering MonomialOrdering::unit_degrevlex(std::size_t r, std::size_t d) {
    return wdegrevlex(std::vector<Rational>(r + d, Rational(1)));
}

MonomialOrdering MonomialOrdering::elim_partials() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::ElimPartials;
    return MonomialOrdering(impl);
}

MonomialOrdering MonomialOrdering::top(MonomialOrdering base) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Top;
    impl->base1 = base.impl_;
    return MonomialOrdering(impl);
}

MonomialOrdering MonomialOrdering::pot(MonomialOrdering base) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Pot;
    impl->base1 = base.impl_;
    return MonomialOrdering(impl);
}

MonomialOrdering MonomialOrdering::elim_components(std::size_t split, MonomialOrdering first,
                                                   MonomialOrdering second) {
    if (split == 0) throw std::invalid_argument("component split must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::ElimComponents;
    impl->split = split;
    impl->base1 = first.impl_;
    impl->base2 = second.impl_;
    return MonomialOrdering(impl);
}

MonomialOrdering::Kind MonomialOrdering::kind() const { return impl_->kind; }

int MonomialOrdering::compare(const OreMonomial& a, const OreMonomial& b) const {
    return compare_impl(*impl_, a, b);
}

bool MonomialOrdering::is_scalar() const {
    return impl_->kind == Kind::WDegRevLex || impl_->kind == Kind::ElimPartials;
}

std::vector<MonomialOrdering> MonomialOrdering::scalar_parts() const {
    std::vector<MonomialOrdering> out;
    struct Walker {
        std::vector<MonomialOrdering>& out;
        void walk(const std::shared_ptr<const Impl>& impl) {
            if (!impl) return;
            if (impl->kind == Kind::WDegRevLex || impl->kind == Kind::ElimPartials) {
                out.push_back(MonomialOrdering(impl));
                return;
            }
            walk(impl->base1);
            walk(impl->base2);
        }
    } walker{out};
    walker.walk(impl_);
    return out;
}

std::string MonomialOrdering::describe() const {
    switch (impl_->kind) {
        case Kind::WDegRevLex: {
            std::ostringstream out;
            out << "wdegrevlex(";
            for (std::size_t i = 0; i < impl_->weights.size(); ++i) {
                if (i) out << ",";
                out << to_string(impl_->weights[i]);
            }
            out << ")";
            return out.str();
        }
        case Kind::ElimPartials:
            return "elim-partials";
        case Kind::Top:
            return "top(" + MonomialOrdering(impl_->base1).describe() + ")";
        case Kind::Pot:
            return "pot(" + MonomialOrdering(impl_->base1).describe() + ")";
        case Kind::ElimComponents:
            return "elim-components(" + std::to_string(impl_->split) + "; " +
                   MonomialOrdering(impl_->base1).describe() + "; " +
                   MonomialOrdering(impl_->base2).describe() + ")";
    }
    return "?";
}

bool check_assumption(const Presentation& pres, const MonomialOrdering& ord) {
    std::size_t i, j;
    return check_assumption(pres, ord, i, j);
}

bool check_assumption(const Presentation& pres, const MonomialOrdering& ord,
                      std::size_t& bad_i, std::size_t& bad_j) {
    const std::size_t r = pres.gen_count();
    const std::size_t d = pres.deriv_count();
    for (const MonomialOrdering& scal : ord.scalar_parts()) {
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                OreMonomial head;
                head.alpha = Exponents(r, 0);
                head.beta = Exponents(d, 0);
                head.alpha[i] = 1;
                head.beta[j] = 1;
                for (const auto& [e, c] : pres.table(i, j).terms()) {
                    OreMonomial m;
                    m.alpha = e;
                    m.beta = Exponents(d, 0);
                    if (scal.compare(m, head) >= 0) {
                        bad_i = i + 1;
                        bad_j = j + 1;
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace weylgp
