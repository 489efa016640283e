#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylgp/janet.hpp"

using namespace weylgp;

namespace {

OreMonomial mono(std::vector<std::uint32_t> alpha, std::vector<std::uint32_t> beta,
                 std::uint32_t component = 1) {
    OreMonomial m;
    m.alpha = std::move(alpha);
    m.beta = std::move(beta);
    m.component = component;
    return m;
}

// Enumerates all monomials (single component) of total degree <= bound.
std::vector<OreMonomial> enumerate_monomials(std::size_t r, std::size_t d, unsigned bound) {
    std::vector<OreMonomial> out;
    const std::size_t n = r + d;
    Exponents e(n, 0);
    for (;;) {
        unsigned total = 0;
        for (auto v : e) total += v;
        if (total <= bound) {
            OreMonomial m;
            m.beta = Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d));
            m.alpha = Exponents(e.begin() + static_cast<std::ptrdiff_t>(d), e.end());
            out.push_back(std::move(m));
        }
        std::size_t k = 0;
        while (k < n) {
            if (e[k] < bound) {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

bool ordinary_multiple(const std::vector<OreMonomial>& M, const OreMonomial& u) {
    for (const auto& m : M)
        if (m.divides(u)) return true;
    return false;
}

int cones_containing(const std::vector<OreMonomial>& M, const std::vector<VarMask>& masks,
                     const OreMonomial& u) {
    int count = 0;
    for (std::size_t i = 0; i < M.size(); ++i)
        if (cone_contains(M[i], masks[i], u)) ++count;
    return count;
}

// Oracle: cones are disjoint everywhere and cover exactly the monomial ideal
// when the set is complete.
void check_cones(const std::vector<OreMonomial>& M, unsigned bound, bool expect_complete) {
    const std::size_t r = M.front().alpha.size();
    const std::size_t d = M.front().beta.size();
    auto masks = multiplicative_variables(M);
    for (const auto& u : enumerate_monomials(r, d, bound)) {
        int hits = cones_containing(M, masks, u);
        CHECK(hits <= 1);
        if (ordinary_multiple(M, u)) {
            if (expect_complete) CHECK(hits == 1);
        } else {
            CHECK(hits == 0);
        }
    }
}

OrePoly random_scalar(std::mt19937& rng, const PresentationPtr& pres,
                      const MonomialOrdering& ord, unsigned max_deg, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-4, 4);
    const std::size_t r = pres->gen_count();
    const std::size_t d = pres->deriv_count();
    std::uniform_int_distribution<std::size_t> pick(0, r + d - 1);
    OrePoly p = OrePoly::zero(pres, ord);
    unsigned t = nterms(rng);
    for (unsigned k = 0; k < t; ++k) {
        OreMonomial m = mono(Exponents(r, 0), Exponents(d, 0));
        unsigned budget = deg(rng);
        for (unsigned b = 0; b < budget; ++b) {
            std::size_t v = pick(rng);
            if (v < r)
                m.alpha[v] += 1;
            else
                m.beta[v - r] += 1;
        }
        long c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    return p;
}

// Internal consistency checks of Remark-style Janet bases: prolongations
// vanish, cones are disjoint up to lm-max + 6, random ideal members reduce
// to zero.
void check_basis(const JanetBasis& basis, const std::vector<OrePoly>& inputs,
                 std::mt19937& rng) {
    const auto& elements = basis.elements();
    REQUIRE_FALSE(elements.empty());
    const PresentationPtr pres = elements.front().presentation();
    const std::size_t r = pres->gen_count();
    const std::size_t d = pres->deriv_count();

    auto lms = basis.leading_monomials();
    unsigned lm_max = 0;
    for (const auto& m : lms)
        lm_max = std::max(lm_max, m.alpha_degree() + m.beta_degree());
    if (lms.front().component == 1 && elements.front().rank() == 1)
        check_cones(lms, lm_max + 6, true);

    // Every non-multiplicative prolongation reduces to zero.
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const VarMask& mask = basis.multiplicative()[i];
        for (std::size_t k = 0; k < mask.size(); ++k) {
            if (mask[k]) continue;
            OreMonomial v = mono(Exponents(r, 0), Exponents(d, 0));
            if (k < d)
                v.beta[k] = 1;
            else
                v.alpha[k - d] = 1;
            OrePoly prolonged =
                OrePoly::monomial(pres, basis.ordering(), v, Rational(1)).multiply(elements[i]);
            CHECK(janet_reduce(prolonged, basis).remainder.is_zero());
        }
    }

    // Inputs reduce to zero, so the basis generates at least their ideal.
    for (const auto& g : inputs) CHECK(is_member(g, basis));

    // Certificates write each basis element as a left combination of inputs.
    if (basis.has_certificates()) {
        for (std::size_t k = 0; k < elements.size(); ++k) {
            OrePoly recon = OrePoly::zero(pres, basis.ordering(), elements[k].rank());
            for (std::size_t i = 0; i < inputs.size(); ++i)
                recon = recon + basis.certificates()[k][i].multiply(
                                    inputs[i].with_ordering(basis.ordering()));
            CHECK(recon.equals(elements[k]));
        }
    }

    // Random left combinations of the inputs reduce to zero.
    for (int trial = 0; trial < 50; ++trial) {
        OrePoly p = OrePoly::zero(pres, basis.ordering(), elements.front().rank());
        for (const auto& g : inputs)
            p = p + random_scalar(rng, pres, basis.ordering(), 2, 3)
                        .multiply(g.with_ordering(basis.ordering()));
        CHECK(janet_reduce(p, basis).remainder.is_zero());
    }
}

}  // namespace

TEST_CASE("Janet partition of the four-element example set") {
    // r = 2, d = 1; positions in the mask are (d1, f1, f2).
    std::vector<OreMonomial> M = {
        mono({1, 2}, {0}),  // f1 f2^2
        mono({2, 1}, {0}),  // f1^2 f2
        mono({0, 1}, {2}),  // f2 d1^2
        mono({1, 0}, {2}),  // f1 d1^2
    };
    auto masks = multiplicative_variables(M);
    CHECK(masks[0] == VarMask{false, false, true});
    CHECK(masks[1] == VarMask{false, true, true});
    CHECK(masks[2] == VarMask{true, false, true});
    CHECK(masks[3] == VarMask{true, true, true});
    check_cones(M, 12, false);

    // The set itself is not complete: d1 * f1 f2^2 lies in <M> but in no
    // cone. The completion covers <M> with disjoint cones.
    CHECK_FALSE(is_janet_complete(M));
    auto completed = janet_completion(M, MonomialOrdering::unit_degrevlex(2, 1));
    CHECK(is_janet_complete(completed));
    auto cmasks = multiplicative_variables(completed);
    for (const auto& u : enumerate_monomials(2, 1, 12)) {
        int hits = cones_containing(completed, cmasks, u);
        CHECK(hits <= 1);
        CHECK((hits == 1) == ordinary_multiple(M, u));
    }
}

TEST_CASE("singleton sets have all variables multiplicative") {
    std::vector<OreMonomial> M = {mono({3, 1}, {2, 0})};
    auto masks = multiplicative_variables(M);
    CHECK(masks[0] == VarMask(4, true));
    auto completion = janet_completion(M, MonomialOrdering::unit_degrevlex(2, 2));
    CHECK(completion.size() == 1);
}

TEST_CASE("cones of random sets are pairwise disjoint") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<unsigned> e(0, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<OreMonomial> M;
        for (int k = 0; k < 6; ++k) M.push_back(mono({}, {e(rng), e(rng)}));
        // Dedupe: the division expects distinct monomials.
        std::sort(M.begin(), M.end(), OreMonomialLess{});
        M.erase(std::unique(M.begin(), M.end()), M.end());
        check_cones(M, 12, false);
    }
}

TEST_CASE("completion of {f1, d1} fills the quadrant") {
    std::vector<OreMonomial> M = {mono({1}, {0}), mono({0}, {1})};
    auto ord = MonomialOrdering::unit_degrevlex(1, 1);
    auto completed = janet_completion(M, ord);
    CHECK(is_janet_complete(completed));
    // Oracle: up to degree 10, [completed] equals <M> and the cones are
    // disjoint.
    auto masks = multiplicative_variables(completed);
    for (const auto& u : enumerate_monomials(1, 1, 10)) {
        int hits = cones_containing(completed, masks, u);
        CHECK(hits <= 1);
        CHECK((hits == 1) == ordinary_multiple(M, u));
    }
}

TEST_CASE("single division step with all variables multiplicative") {
    // K = Q[f1, f2] with trivial derivations, one partial.
    const std::size_t r = 2;
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(1, CommPoly(r)));
    auto pres = std::make_shared<Presentation>(std::vector<std::string>{"f1", "f2"},
                                               std::vector<std::string>{"d1"}, table);
    auto ord = MonomialOrdering::unit_degrevlex(2, 1);
    OrePoly d1sq = OrePoly::monomial(pres, ord, mono({0, 0}, {2}), Rational(1));
    JanetBasis L({d1sq}, {VarMask(3, true)}, ord);

    OrePoly p = OrePoly::monomial(pres, ord, mono({1, 0}, {2}), Rational(1)) +
                OrePoly::generator(pres, ord, 1);
    auto result = janet_reduce(p, L);
    CHECK(result.remainder.equals(OrePoly::generator(pres, ord, 1)));
    CHECK(result.quotients[0].equals(OrePoly::generator(pres, ord, 0)));
    // p = q * g + remainder holds exactly.
    CHECK((result.quotients[0].multiply(d1sq) + result.remainder).equals(p));
}

TEST_CASE("basis of the partial ideal is the generating set") {
    auto weyl2 = weyl_presentation(2);
    auto ord = MonomialOrdering::unit_degrevlex(0, 2);
    OrePoly dx = OrePoly::partial(weyl2, ord, 0);
    OrePoly dy = OrePoly::partial(weyl2, ord, 1);
    JanetBasis basis = janet_basis({dx, dy}, ord);
    REQUIRE(basis.size() == 2);
    CHECK(is_member(dx, basis));
    CHECK(is_member(dy, basis));
    CHECK(is_janet_complete(basis.leading_monomials()));
    // 1 is not a member of the proper ideal.
    CHECK_FALSE(is_member(OrePoly::constant(weyl2, ord, Rational(1)), basis));
}

TEST_CASE("basis of the rotation operator ideal is internally consistent") {
    auto pres = coordinate_presentation(2);
    auto ord = MonomialOrdering::unit_degrevlex(2, 2);
    // x dy - y dx
    OrePoly gen = OrePoly::generator(pres, ord, 0).multiply(OrePoly::partial(pres, ord, 1)) -
                  OrePoly::generator(pres, ord, 1).multiply(OrePoly::partial(pres, ord, 0));
    JanetBasis basis = janet_basis({gen}, ord);
    std::mt19937 rng(61);
    check_basis(basis, {gen}, rng);
}

TEST_CASE("bases over the exponential presentation are internally consistent") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    std::mt19937 rng(71);

    OrePoly d1 = OrePoly::partial(pres, ord, 0);
    OrePoly d2 = OrePoly::partial(pres, ord, 1);
    OrePoly f1 = OrePoly::generator(pres, ord, 0);
    OrePoly f3 = OrePoly::generator(pres, ord, 2);

    std::vector<std::vector<OrePoly>> generating_sets = {
        {f3.multiply(d1)},
        {d1.multiply(f3)},
        {d1.multiply(f3), d2.multiply(f1)},
        {f1.multiply(d1) + f3.multiply(d2)},
    };
    for (const auto& gens : generating_sets) {
        JanetBasis basis = janet_basis(gens, ord);
        check_basis(basis, gens, rng);
    }
}

TEST_CASE("normal forms are invariant under adding ideal elements") {
    auto pres = coordinate_presentation(2);
    auto ord = MonomialOrdering::unit_degrevlex(2, 2);
    OrePoly gen = OrePoly::generator(pres, ord, 0).multiply(OrePoly::partial(pres, ord, 1)) -
                  OrePoly::generator(pres, ord, 1).multiply(OrePoly::partial(pres, ord, 0));
    JanetBasis basis = janet_basis({gen}, ord);
    std::mt19937 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        OrePoly p = random_scalar(rng, pres, ord, 3, 4);
        OrePoly shifted = p;
        for (const auto& g : basis.elements())
            shifted = shifted + random_scalar(rng, pres, ord, 2, 2).multiply(g);
        CHECK(janet_reduce(p, basis).remainder.equals(
            janet_reduce(shifted, basis).remainder));
    }
}

TEST_CASE("membership certificates reconstruct the reductions") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    OrePoly d1 = OrePoly::partial(pres, ord, 0);
    OrePoly f3 = OrePoly::generator(pres, ord, 2);
    JanetBasis basis = janet_basis({d1.multiply(f3)}, ord);
    std::mt19937 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        OrePoly p = random_scalar(rng, pres, ord, 3, 4);
        auto result = janet_reduce(p, basis);
        OrePoly recon = result.remainder;
        for (std::size_t k = 0; k < basis.size(); ++k)
            recon = recon + result.quotients[k].multiply(basis.elements()[k]);
        CHECK(recon.equals(p));
        // The remainder avoids every cone.
        if (!result.remainder.is_zero()) {
            auto lms = basis.leading_monomials();
            auto masks = basis.multiplicative();
            for (const auto& [m, c] : result.remainder.terms())
                CHECK(involutive_divisor(lms, masks, m) < 0);
        }
    }
}

TEST_CASE("zero generators are rejected") {
    auto weyl2 = weyl_presentation(2);
    auto ord = MonomialOrdering::unit_degrevlex(0, 2);
    CHECK_THROWS(janet_basis({OrePoly::zero(weyl2, ord)}, ord));
    CHECK_THROWS(multiplicative_variables({}));
}
