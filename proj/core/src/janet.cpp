#include "weylgp/janet.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylgp {

namespace {

// epsilon position -> monomial with a single 1 exponent there.
OreMonomial position_monomial(std::size_t d, std::size_t r, std::size_t pos,
                              std::uint32_t component) {
    OreMonomial m;
    m.alpha = Exponents(r, 0);
    m.beta = Exponents(d, 0);
    m.component = component;
    if (pos < d)
        m.beta[pos] = 1;
    else
        m.alpha[pos - d] = 1;
    return m;
}

}  // namespace

std::vector<VarMask> multiplicative_variables(const std::vector<OreMonomial>& monomials) {
    if (monomials.empty()) throw std::invalid_argument("empty monomial set");
    const std::size_t n = monomials.front().epsilon().size();
    std::vector<Exponents> eps;
    eps.reserve(monomials.size());
    for (const auto& m : monomials) {
        eps.push_back(m.epsilon());
        if (eps.back().size() != n) throw std::invalid_argument("monomials over different rings");
    }
    std::vector<VarMask> masks(monomials.size(), VarMask(n, false));
    for (std::size_t a = 0; a < monomials.size(); ++a) {
        for (std::size_t k = 0; k < n; ++k) {
            std::uint32_t maxk = 0;
            for (std::size_t b = 0; b < monomials.size(); ++b) {
                if (monomials[b].component != monomials[a].component) continue;
                bool prefix_equal = true;
                for (std::size_t l = 0; l < k; ++l)
                    if (eps[b][l] != eps[a][l]) {
                        prefix_equal = false;
                        break;
                    }
                if (prefix_equal) maxk = std::max(maxk, eps[b][k]);
            }
            masks[a][k] = eps[a][k] == maxk;
        }
    }
    return masks;
}

bool cone_contains(const OreMonomial& m, const VarMask& mask, const OreMonomial& u) {
    if (m.component != u.component) return false;
    Exponents me = m.epsilon(), ue = u.epsilon();
    for (std::size_t k = 0; k < me.size(); ++k) {
        if (ue[k] < me[k]) return false;
        if (ue[k] > me[k] && !mask[k]) return false;
    }
    return true;
}

int involutive_divisor(const std::vector<OreMonomial>& monomials,
                       const std::vector<VarMask>& masks, const OreMonomial& u) {
    int found = -1;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (!cone_contains(monomials[i], masks[i], u)) continue;
        if (found >= 0) throw std::logic_error("Janet cones overlap");
        found = static_cast<int>(i);
    }
    return found;
}

bool in_monomial_ideal(const std::vector<OreMonomial>& monomials, const OreMonomial& u) {
    for (const auto& m : monomials)
        if (m.divides(u)) return true;
    return false;
}

std::vector<OreMonomial> janet_completion(std::vector<OreMonomial> monomials,
                                          const MonomialOrdering& ord) {
    if (monomials.empty()) throw std::invalid_argument("empty monomial set");
    const std::size_t d = monomials.front().beta.size();
    const std::size_t r = monomials.front().alpha.size();
    // Drop duplicates.
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = monomials.size(); j-- > i + 1;)
            if (monomials[j] == monomials[i]) monomials.erase(monomials.begin() + j);
    for (;;) {
        auto masks = multiplicative_variables(monomials);
        bool have = false;
        OreMonomial best;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            for (std::size_t k = 0; k < masks[i].size(); ++k) {
                if (masks[i][k]) continue;
                OreMonomial u =
                    position_monomial(d, r, k, monomials[i].component).times(monomials[i]);
                if (involutive_divisor(monomials, masks, u) >= 0) continue;
                if (!have || ord.compare(u, best) < 0) {
                    best = u;
                    have = true;
                }
            }
        }
        if (!have) return monomials;
        monomials.push_back(best);
    }
}

bool is_janet_complete(const std::vector<OreMonomial>& monomials) {
    const std::size_t d = monomials.front().beta.size();
    const std::size_t r = monomials.front().alpha.size();
    auto masks = multiplicative_variables(monomials);
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t k = 0; k < masks[i].size(); ++k) {
            if (masks[i][k]) continue;
            OreMonomial u = position_monomial(d, r, k, monomials[i].component).times(monomials[i]);
            if (involutive_divisor(monomials, masks, u) < 0) return false;
        }
    return true;
}

JanetBasis::JanetBasis(std::vector<OrePoly> elements, std::vector<VarMask> multiplicative,
                       MonomialOrdering ordering, std::vector<std::vector<OrePoly>> certificates)
    : elements_(std::move(elements)),
      multiplicative_(std::move(multiplicative)),
      ordering_(std::move(ordering)),
      certificates_(std::move(certificates)) {
    if (elements_.size() != multiplicative_.size())
        throw std::invalid_argument("one variable partition per basis element required");
}

std::vector<OreMonomial> JanetBasis::leading_monomials() const {
    std::vector<OreMonomial> lms;
    lms.reserve(elements_.size());
    for (const auto& g : elements_) lms.push_back(g.leading_monomial());
    return lms;
}

std::vector<std::string> JanetBasis::multiplicative_names(std::size_t index) const {
    const auto& pres = *elements_.at(index).presentation();
    const std::size_t d = pres.deriv_count();
    std::vector<std::string> names;
    const VarMask& mask = multiplicative_.at(index);
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (!mask[k]) continue;
        names.push_back(k < d ? pres.derivation_names()[k] : pres.generator_names()[k - d]);
    }
    return names;
}

namespace {

struct WorkEntry {
    OrePoly poly;
    std::vector<OrePoly> combo;  // scalar multipliers of the original inputs
};

void scale_combo(std::vector<OrePoly>& combo, const Rational& factor) {
    for (auto& c : combo) c = c * factor;
}

// entry -= t * other (poly and certificate together), t a scalar element.
void subtract_multiple(WorkEntry& entry, const OrePoly& t, const WorkEntry& other) {
    entry.poly = entry.poly - t.multiply(other.poly);
    for (std::size_t i = 0; i < entry.combo.size(); ++i)
        entry.combo[i] = entry.combo[i] - t.multiply(other.combo[i]);
}

WorkEntry left_multiply(const OrePoly& t, const WorkEntry& entry) {
    WorkEntry result{t.multiply(entry.poly), {}};
    result.combo.reserve(entry.combo.size());
    for (const auto& c : entry.combo) result.combo.push_back(t.multiply(c));
    return result;
}

void normalize_entry(WorkEntry& entry) {
    if (entry.poly.is_zero()) return;
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : entry.poly.terms()) coeffs.push_back(c);
    Rational divisor = content(coeffs);
    if (entry.poly.leading_term().second < 0) divisor = -divisor;
    entry.poly = entry.poly * (Rational(1) / divisor);
    scale_combo(entry.combo, Rational(1) / divisor);
}

// Head reduction until leading monomials are pairwise distinct and form the
// minimal generating set of their monomial ideal.
void autoreduce_heads(std::vector<WorkEntry>& entries) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < entries.size() && !changed; ++i) {
            for (std::size_t j = 0; j < entries.size(); ++j) {
                if (i == j) continue;
                const OrePoly& pi = entries[i].poly;
                const OrePoly& pj = entries[j].poly;
                const OreMonomial& mi = pi.leading_monomial();
                const OreMonomial& mj = pj.leading_monomial();
                if (!mj.divides(mi)) continue;
                if (mi == mj && j > i) continue;  // let the earlier entry win
                OreMonomial u;
                u.alpha.resize(mi.alpha.size());
                u.beta.resize(mi.beta.size());
                for (std::size_t k = 0; k < u.alpha.size(); ++k)
                    u.alpha[k] = mi.alpha[k] - mj.alpha[k];
                for (std::size_t k = 0; k < u.beta.size(); ++k)
                    u.beta[k] = mi.beta[k] - mj.beta[k];
                Rational factor = pi.leading_term().second / pj.leading_term().second;
                OrePoly t = OrePoly::monomial(pi.presentation(), pi.ordering(), u, factor);
                subtract_multiple(entries[i], t, entries[j]);
                if (entries[i].poly.is_zero())
                    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
                else
                    normalize_entry(entries[i]);
                changed = true;
                break;
            }
        }
    }
}

struct NormalFormResult {
    WorkEntry entry;
    std::vector<OrePoly> quotients;
};

// Full involutive normal form of `input` modulo the completed set `basis`.
NormalFormResult janet_normal_form(WorkEntry input, const std::vector<WorkEntry>& basis,
                                   const std::vector<OreMonomial>& lms,
                                   const std::vector<VarMask>& masks) {
    const OrePoly zero_scalar =
        OrePoly::zero(input.poly.presentation(), input.poly.ordering(), 1);
    NormalFormResult result{std::move(input), std::vector<OrePoly>(basis.size(), zero_scalar)};
    OrePoly remainder(result.entry.poly.presentation(), result.entry.poly.ordering(),
                      result.entry.poly.rank());
    OrePoly work = result.entry.poly;
    while (!work.is_zero()) {
        auto [m, c] = work.leading_term();
        int idx = involutive_divisor(lms, masks, m);
        if (idx < 0) {
            remainder.add_term(m, c);
            work.add_term(m, -c);
            continue;
        }
        const OrePoly& g = basis[static_cast<std::size_t>(idx)].poly;
        const OreMonomial& mg = lms[static_cast<std::size_t>(idx)];
        OreMonomial u;
        u.alpha.resize(m.alpha.size());
        u.beta.resize(m.beta.size());
        for (std::size_t k = 0; k < u.alpha.size(); ++k) u.alpha[k] = m.alpha[k] - mg.alpha[k];
        for (std::size_t k = 0; k < u.beta.size(); ++k) u.beta[k] = m.beta[k] - mg.beta[k];
        OrePoly t = OrePoly::monomial(work.presentation(), work.ordering(), u,
                                      c / g.leading_term().second);
        work = work - t.multiply(g);
        result.quotients[static_cast<std::size_t>(idx)] =
            result.quotients[static_cast<std::size_t>(idx)] + t;
        for (std::size_t i = 0; i < result.entry.combo.size(); ++i)
            result.entry.combo[i] =
                result.entry.combo[i] -
                t.multiply(basis[static_cast<std::size_t>(idx)].combo[i]);
    }
    result.entry.poly = std::move(remainder);
    return result;
}

// Janet completion of the set of polynomials: appended elements are variable
// prolongations of existing ones, so the attached certificates stay valid.
void complete_entries(std::vector<WorkEntry>& entries, const MonomialOrdering& ord) {
    const auto& pres = *entries.front().poly.presentation();
    const std::size_t d = pres.deriv_count();
    const std::size_t r = pres.gen_count();
    for (;;) {
        std::vector<OreMonomial> lms;
        lms.reserve(entries.size());
        for (const auto& e : entries) lms.push_back(e.poly.leading_monomial());
        auto masks = multiplicative_variables(lms);
        bool have = false;
        OreMonomial best;
        std::size_t best_idx = 0, best_pos = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            for (std::size_t k = 0; k < masks[i].size(); ++k) {
                if (masks[i][k]) continue;
                OreMonomial u = position_monomial(d, r, k, lms[i].component).times(lms[i]);
                if (involutive_divisor(lms, masks, u) >= 0) continue;
                if (!have || ord.compare(u, best) < 0) {
                    best = u;
                    best_idx = i;
                    best_pos = k;
                    have = true;
                }
            }
        }
        if (!have) return;
        OrePoly var = OrePoly::monomial(entries[best_idx].poly.presentation(), ord,
                                        position_monomial(d, r, best_pos, 1), Rational(1));
        WorkEntry prolonged = left_multiply(var, entries[best_idx]);
        if (!(prolonged.poly.leading_monomial() == best))
            throw std::logic_error("prolongation changed the leading monomial");
        entries.push_back(std::move(prolonged));
    }
}

}  // namespace

ReduceResult janet_reduce(const OrePoly& p, const JanetBasis& basis) {
    if (basis.elements().empty())
        return ReduceResult{p.with_ordering(basis.ordering()), {}};
    std::vector<WorkEntry> entries;
    entries.reserve(basis.size());
    for (const auto& g : basis.elements()) entries.push_back(WorkEntry{g, {}});
    auto lms = basis.leading_monomials();
    if (!is_janet_complete(lms))
        throw std::invalid_argument("reduction requires a Janet complete basis");
    WorkEntry input{p.with_ordering(basis.ordering()), {}};
    auto nf = janet_normal_form(std::move(input), entries, lms, basis.multiplicative());
    return ReduceResult{std::move(nf.entry.poly), std::move(nf.quotients)};
}

bool is_member(const OrePoly& p, const JanetBasis& basis) {
    return janet_reduce(p, basis).remainder.is_zero();
}

JanetBasis janet_basis(const std::vector<OrePoly>& generators, const MonomialOrdering& ord,
                       const JanetOptions& options) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    const PresentationPtr pres = generators.front().presentation();
    {
        std::size_t bad_i = 0, bad_j = 0;
        if (!check_assumption(*pres, ord, bad_i, bad_j))
            throw std::invalid_argument(
                "ordering violates the leading monomial assumption at generator " +
                std::to_string(bad_i) + ", derivation " + std::to_string(bad_j));
    }
    const std::uint32_t rank = generators.front().rank();
    const OrePoly zero_scalar = OrePoly::zero(pres, ord, 1);
    const OrePoly one_scalar = OrePoly::constant(pres, ord, Rational(1));

    std::vector<WorkEntry> pool;
    pool.reserve(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].is_zero()) throw std::invalid_argument("zero generator");
        if (generators[i].rank() != rank) throw std::invalid_argument("module rank mismatch");
        WorkEntry e{generators[i].with_ordering(ord), {}};
        if (options.with_certificates) {
            e.combo.assign(generators.size(), zero_scalar);
            e.combo[i] = one_scalar;
        }
        normalize_entry(e);
        pool.push_back(std::move(e));
    }

    // Minimal generators of the current leading monomial ideal, the
    // termination witness: it must grow strictly at every augmentation.
    auto lm_ideal_gens = [](const std::vector<WorkEntry>& entries) {
        std::vector<OreMonomial> lms;
        for (const auto& e : entries) lms.push_back(e.poly.leading_monomial());
        return lms;
    };

    for (;;) {
        autoreduce_heads(pool);
        if (pool.empty()) {
            return JanetBasis({}, {}, ord, {});
        }
        std::vector<WorkEntry> completed = pool;
        complete_entries(completed, ord);
        std::vector<OreMonomial> lms;
        lms.reserve(completed.size());
        for (const auto& e : completed) lms.push_back(e.poly.leading_monomial());
        auto masks = multiplicative_variables(lms);

        const auto& cpres = *completed.front().poly.presentation();
        const std::size_t d = cpres.deriv_count();
        const std::size_t r = cpres.gen_count();

        // Non-multiplicative prolongations, smallest leading monomial first.
        std::vector<std::pair<std::size_t, std::size_t>> prolongations;
        for (std::size_t i = 0; i < completed.size(); ++i)
            for (std::size_t k = 0; k < masks[i].size(); ++k)
                if (!masks[i][k]) prolongations.emplace_back(i, k);
        std::sort(prolongations.begin(), prolongations.end(),
                  [&](const auto& a, const auto& b) {
                      OreMonomial ua = position_monomial(d, r, a.second, lms[a.first].component)
                                           .times(lms[a.first]);
                      OreMonomial ub = position_monomial(d, r, b.second, lms[b.first].component)
                                           .times(lms[b.first]);
                      return ord.compare(ua, ub) < 0;
                  });

        bool augmented = false;
        for (const auto& [i, k] : prolongations) {
            OrePoly var = OrePoly::monomial(pres, ord, position_monomial(d, r, k, 1), Rational(1));
            WorkEntry prolonged = left_multiply(var, completed[i]);
            auto nf = janet_normal_form(std::move(prolonged), completed, lms, masks);
            if (nf.entry.poly.is_zero()) continue;
            if (in_monomial_ideal(lm_ideal_gens(pool), nf.entry.poly.leading_monomial()))
                throw std::logic_error("leading monomial ideal failed to grow");
            normalize_entry(nf.entry);
            pool.push_back(std::move(nf.entry));
            augmented = true;
            break;
        }
        if (augmented) continue;

        // Tail-reduce for a canonical result; heads are untouched.
        for (std::size_t i = 0; i < completed.size(); ++i) {
            auto [m, c] = completed[i].poly.leading_term();
            WorkEntry tail = completed[i];
            tail.poly.add_term(m, -c);
            auto nf = janet_normal_form(std::move(tail), completed, lms, masks);
            completed[i].poly = nf.entry.poly;
            completed[i].poly.add_term(m, c);
            completed[i].combo = std::move(nf.entry.combo);
            normalize_entry(completed[i]);
        }

        std::vector<OrePoly> elements;
        std::vector<std::vector<OrePoly>> certificates;
        elements.reserve(completed.size());
        for (auto& e : completed) {
            elements.push_back(std::move(e.poly));
            if (options.with_certificates) certificates.push_back(std::move(e.combo));
        }
        lms.clear();
        for (const auto& g : elements) lms.push_back(g.leading_monomial());
        return JanetBasis(std::move(elements), multiplicative_variables(lms), ord,
                          std::move(certificates));
    }
}

}  // namespace weylgp
