#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weylgp/parse.hpp"

using namespace weylgp;

namespace {

OrePoly random_operator(std::mt19937& rng, const PresentationPtr& pres,
                        const MonomialOrdering& ord) {
    std::uniform_int_distribution<unsigned> nterms(1, 5);
    std::uniform_int_distribution<unsigned> deg(0, 4);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    const std::size_t r = pres->gen_count();
    const std::size_t d = pres->deriv_count();
    std::uniform_int_distribution<std::size_t> pick(0, r + d - 1);
    OrePoly p = OrePoly::zero(pres, ord);
    unsigned t = nterms(rng);
    for (unsigned k = 0; k < t; ++k) {
        OreMonomial m;
        m.alpha = Exponents(r, 0);
        m.beta = Exponents(d, 0);
        unsigned budget = deg(rng);
        for (unsigned b = 0; b < budget; ++b) {
            std::size_t v = pick(rng);
            if (v < r)
                m.alpha[v] += 1;
            else
                m.beta[v - r] += 1;
        }
        long n = num(rng);
        if (n == 0) n = 1;
        p.add_term(m, rat(n, den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("operator grammar basics") {
    auto pres = double_drop_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(4, 2);

    OrePoly dx = parse_operator("dx", pres, ord);
    CHECK(dx.equals(OrePoly::partial(pres, ord, 0)));

    OrePoly p = parse_operator("2*x*sin^3*dx^2 - 1/2*dy", pres, ord);
    CHECK(p.term_count() == 2);
    OreMonomial lead;
    lead.alpha = {1, 0, 3, 0};
    lead.beta = {2, 0};
    CHECK(p.terms().begin()->first == lead);
    CHECK(p.terms().begin()->second == Rational(2));

    CHECK(parse_operator("0", pres, ord).is_zero());
    CHECK(parse_operator("3 - 3", pres, ord).is_zero());
    CHECK(parse_operator("-dx + dx", pres, ord).is_zero());
    CHECK(parse_operator("x*y - y*x", pres, ord).is_zero());
}

TEST_CASE("operator grammar errors carry columns") {
    auto pres = double_drop_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(4, 2);
    try {
        parse_operator("x*dq", pres, ord);
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.column() == 3);
        CHECK(std::string(err.what()).find("dq") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_operator("x^-2", pres, ord), ParseError);
    CHECK_THROWS_AS(parse_operator("x**y", pres, ord), ParseError);
    CHECK_THROWS_AS(parse_operator("1/0", pres, ord), ParseError);
}

TEST_CASE("print-parse round trip on random operators") {
    auto pres = double_drop_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(4, 2);
    std::mt19937 rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        OrePoly p = random_operator(rng, pres, ord);
        OrePoly q = parse_operator(p.to_string(), pres, ord);
        CHECK(q.equals(p));
    }
}

TEST_CASE("coefficient polynomials reject partials") {
    auto pres = double_drop_presentation();
    CommPoly f = parse_coeff_poly("y^2 - sin^4", *pres);
    CHECK(f.total_degree() == 4);
    CHECK_THROWS_AS(parse_coeff_poly("y*dx", *pres), ParseError);
}

TEST_CASE("expression grammar") {
    auto vars = coordinate_vars(2);
    SymExpr f = parse_symexpr("-1/4*(3*sin(x2)-x1+3)*(3*sin(x2)-x1)^2", vars);
    double xv = 0.5, yv = 0.25;
    double s = 3 * std::sin(yv);
    CHECK(f.eval({xv, yv}) ==
          doctest::Approx(-0.25 * (s - xv + 3) * (s - xv) * (s - xv)).epsilon(1e-12));

    SymExpr g = parse_symexpr("x^2 + y^2 - 1", vars);  // x,y aliases for d <= 3
    CHECK(g.eval({0.6, 0.8}) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(parse_symexpr("2.5", vars).eval({0, 0}) == doctest::Approx(2.5));
    CHECK(parse_symexpr("1/(1+1)", vars).eval({0, 0}) == doctest::Approx(0.5));
    CHECK(parse_symexpr("exp(0)", vars).eval({0, 0}) == doctest::Approx(1.0));
    CHECK(parse_symexpr("pi/2", vars).eval({0, 0}) == doctest::Approx(M_PI / 2));
    CHECK(parse_symexpr("sqrt(abs(-4))", vars).eval({0, 0}) == doctest::Approx(2.0));

    try {
        parse_symexpr("x1 + q7", vars);
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.column() == 6);
    }
    CHECK_THROWS_AS(parse_symexpr("foo(x1)", vars), ParseError);
    CHECK_THROWS_AS(parse_symexpr("(x1", vars), ParseError);
    CHECK_THROWS_AS(parse_symexpr("x1 x2", vars), ParseError);
}
