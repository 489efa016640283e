#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylgp/opmatrix.hpp"
#include "weylgp/orepoly.hpp"

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

unsigned long long pow3(unsigned n) {
    unsigned long long v = 1;
    for (unsigned k = 0; k < n; ++k) v *= 3;
    return v;
}

}  // namespace

TEST_CASE("products commute partials past coefficients") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    OrePoly d1 = OrePoly::partial(pres, ord, 0);
    OrePoly d2 = OrePoly::partial(pres, ord, 1);
    OrePoly f1 = OrePoly::generator(pres, ord, 0);
    OrePoly f2 = OrePoly::generator(pres, ord, 1);
    OrePoly f3 = OrePoly::generator(pres, ord, 2);
    OrePoly one = OrePoly::constant(pres, ord, Rational(1));

    // d1 x = x d1 + 1
    CHECK(d1.multiply(f1).equals(f1.multiply(d1) + one));
    // d1 E = E d1 + 2 x E
    CHECK(d1.multiply(f3).equals(f3.multiply(d1) + f1.multiply(f3) * Rational(2)));
    // (d1 + y) d2 - d2 (d1 + y) = -delta_2(y) = -1
    OrePoly p = d1 + f2;
    CHECK((p.multiply(d2) - d2.multiply(p)).equals(one * Rational(-1)));
}

TEST_CASE("monomial ordering comparisons") {
    auto weyl2 = weyl_presentation(2);
    auto drl = MonomialOrdering::unit_degrevlex(0, 2);
    // degree tie broken from the last exponent, larger wins
    CHECK(drl.compare(mono({}, {1, 2}), mono({}, {2, 1})) > 0);

    auto pres = exp_circle_presentation();
    auto elim = MonomialOrdering::elim_partials();
    CHECK(elim.compare(mono({100, 0, 0}, {0, 0}), mono({0, 0, 0}, {1, 0})) < 0);

    auto top = MonomialOrdering::top(MonomialOrdering::unit_degrevlex(0, 2));
    auto pot = MonomialOrdering::pot(MonomialOrdering::unit_degrevlex(0, 2));
    // POT: anything in component 2 is below anything in component 1.
    CHECK(pot.compare(mono({}, {5, 5}, 2), mono({}, {0, 1}, 1)) < 0);
    // TOP: the monomial decides first.
    CHECK(top.compare(mono({}, {5, 5}, 2), mono({}, {0, 1}, 1)) > 0);
    CHECK(top.compare(mono({}, {1, 0}, 2), mono({}, {1, 0}, 1)) < 0);
}

TEST_CASE("ordering axioms hold on random monomials") {
    auto pres = exp_circle_presentation();
    std::vector<MonomialOrdering> orderings = {
        MonomialOrdering::unit_degrevlex(3, 2),
        MonomialOrdering::wdegrevlex({Rational(1), Rational(2), Rational(1), Rational(3, 2),
                                      Rational(1)}),
        MonomialOrdering::elim_partials(),
    };
    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned> e(0, 4);
    auto random_mono = [&] {
        return mono({e(rng), e(rng), e(rng)}, {e(rng), e(rng)});
    };
    OreMonomial unit = mono({0, 0, 0}, {0, 0});
    for (const auto& ord : orderings) {
        for (int trial = 0; trial < 200; ++trial) {
            OreMonomial a = random_mono(), b = random_mono(), c = random_mono();
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            CHECK((ord.compare(a, a) == 0));
            if (ab == 0) CHECK(a == b);  // total on distinct monomials
            // transitivity
            if (ab <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
            // 1 is minimal
            if (!(a == unit)) CHECK(ord.compare(unit, a) < 0);
            // multiplication compatibility
            if (ab < 0) {
                OreMonomial fa = mono({1, 0, 0}, {0, 0}).times(a);
                OreMonomial fb = mono({1, 0, 0}, {0, 0}).times(b);
                CHECK(ord.compare(fa, fb) < 0);
                OreMonomial da = a.times(mono({0, 0, 0}, {0, 1}));
                OreMonomial db = b.times(mono({0, 0, 0}, {0, 1}));
                CHECK(ord.compare(da, db) < 0);
            }
        }
    }
}

TEST_CASE("leading monomial assumption check") {
    auto pres = exp_circle_presentation();
    CHECK(check_assumption(*pres, MonomialOrdering::unit_degrevlex(3, 2)));
    CHECK(check_assumption(*pres, MonomialOrdering::elim_partials()));

    // d1 f1 = f1 d1 + f1^3: under unit weights the cubic term dominates.
    std::vector<std::vector<CommPoly>> table{{CommPoly::variable(1, 0) *
                                              CommPoly::variable(1, 0) *
                                              CommPoly::variable(1, 0)}};
    auto cubic = std::make_shared<Presentation>(std::vector<std::string>{"f1"},
                                                std::vector<std::string>{"d1"}, table);
    std::size_t bi = 0, bj = 0;
    CHECK_FALSE(check_assumption(*cubic, MonomialOrdering::unit_degrevlex(1, 1), bi, bj));
    CHECK(bi == 1);
    CHECK(bj == 1);
    CHECK(check_assumption(*cubic, MonomialOrdering::elim_partials()));
    // Heavier partial weight restores the assumption: w_d >= 3 - 1.
    CHECK(check_assumption(*cubic,
                           MonomialOrdering::wdegrevlex({Rational(1), Rational(2)})));
}

TEST_CASE("leading terms") {
    auto pres = exp_circle_presentation();
    auto drl = MonomialOrdering::unit_degrevlex(3, 2);
    auto elim = MonomialOrdering::elim_partials();

    OrePoly p = OrePoly::generator(pres, drl, 0).multiply(OrePoly::partial(pres, drl, 0)) +
                OrePoly::constant(pres, drl, Rational(1));
    CHECK(p.leading_term().first == mono({1, 0, 0}, {1, 0}));
    CHECK(p.leading_term().second == Rational(1));

    OrePoly q = OrePoly::partial(pres, elim, 1) +
                OrePoly::monomial(pres, elim, mono({10, 0, 0}, {0, 0}), Rational(1));
    CHECK(q.leading_term().first == mono({0, 0, 0}, {0, 1}));
    CHECK(q.with_ordering(drl).leading_term().first == mono({10, 0, 0}, {0, 0}));

    CHECK_THROWS(OrePoly::zero(pres, drl).leading_term());
}

TEST_CASE("ring axioms on random elements") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    OrePoly one = OrePoly::constant(pres, ord, Rational(1));
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        OrePoly p = random_scalar(rng, pres, ord, 3, 5);
        OrePoly q = random_scalar(rng, pres, ord, 3, 5);
        OrePoly s = random_scalar(rng, pres, ord, 3, 5);
        CHECK(p.multiply(q).multiply(s).equals(p.multiply(q.multiply(s))));
        CHECK(p.multiply(q + s).equals(p.multiply(q) + p.multiply(s)));
        CHECK((p + q).multiply(s).equals(p.multiply(s) + q.multiply(s)));
        CHECK(one.multiply(p).equals(p));
        CHECK(p.multiply(one).equals(p));
    }
}

TEST_CASE("leading monomials are multiplicative under the assumption") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        OrePoly p = random_scalar(rng, pres, ord, 3, 4);
        OrePoly q = random_scalar(rng, pres, ord, 3, 4);
        OrePoly prod = p.multiply(q);
        REQUIRE_FALSE(prod.is_zero());
        CHECK(prod.leading_monomial() ==
              p.leading_monomial().times(q.leading_monomial()));
    }
}

TEST_CASE("commutation step count stays within the termination bound") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        OrePoly p = random_scalar(rng, pres, ord, 3, 4);
        OrePoly q = random_scalar(rng, pres, ord, 3, 4);
        detail::commutation_steps = 0;
        (void)p.multiply(q);
        unsigned long long bound = static_cast<unsigned long long>(p.term_count()) *
                                   q.term_count() * pow3(p.max_beta_degree());
        CHECK(detail::commutation_steps <= bound);
    }
}

TEST_CASE("module operations") {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    OrePoly d1 = OrePoly::partial(pres, ord, 0);
    OrePoly f1 = OrePoly::generator(pres, ord, 0);
    OrePoly one = OrePoly::constant(pres, ord, Rational(1));

    // d1 (f1, 0) = (f1 d1 + 1, 0)
    OrePoly row = f1.embedded(1, 2);
    OrePoly acted = d1.multiply(row);
    CHECK(acted.component_part(1).equals(f1.multiply(d1) + one));
    CHECK(acted.component_part(2).is_zero());

    // [dx dy] [dy; -dx] = 0 over the pure Weyl algebra
    auto weyl2 = weyl_presentation(2);
    auto word = MonomialOrdering::unit_degrevlex(0, 2);
    OrePoly dx = OrePoly::partial(weyl2, word, 0);
    OrePoly dy = OrePoly::partial(weyl2, word, 1);
    OperatorMatrix A(weyl2, word, 1, 2);
    A.set(0, 0, dx);
    A.set(0, 1, dy);
    OperatorMatrix B(weyl2, word, 2, 1);
    B.set(0, 0, dy);
    B.set(1, 0, -dx);
    CHECK(A.multiply(B).is_zero());

    // associativity of matrix products over random operator matrices
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        OperatorMatrix M1(pres, ord, 2, 2), M2(pres, ord, 2, 2), M3(pres, ord, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                M1.set(i, j, random_scalar(rng, pres, ord, 2, 3));
                M2.set(i, j, random_scalar(rng, pres, ord, 2, 3));
                M3.set(i, j, random_scalar(rng, pres, ord, 2, 3));
            }
        OperatorMatrix lhs = M1.multiply(M2).multiply(M3);
        OperatorMatrix rhs = M1.multiply(M2.multiply(M3));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(lhs.at(i, j).equals(rhs.at(i, j)));
    }

    CHECK_THROWS(A.multiply(A));  // shape mismatch
}

TEST_CASE("rejects mixing incompatible presentations") {
    auto a = exp_circle_presentation();
    auto b = double_drop_presentation();
    auto orda = MonomialOrdering::unit_degrevlex(3, 2);
    auto ordb = MonomialOrdering::unit_degrevlex(4, 2);
    OrePoly pa = OrePoly::partial(a, orda, 0);
    OrePoly pb = OrePoly::partial(b, ordb, 0);
    CHECK_THROWS(pa.multiply(pb));
    CHECK_THROWS(pa + pb);
}
