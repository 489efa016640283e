#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylgp/presentation.hpp"

using namespace weylgp;

namespace {

// Independent differentiator: peels one generator at a time with the product
// rule instead of using the partial-derivative formula.
CommPoly oracle_derive_monomial(const Presentation& pres, const Exponents& e, std::size_t j) {
    const std::size_t r = pres.gen_count();
    std::size_t i = 0;
    while (i < r && e[i] == 0) ++i;
    if (i == r) return CommPoly(r);
    Exponents rest = e;
    rest[i] -= 1;
    CommPoly rest_poly = CommPoly::monomial(rest, Rational(1));
    CommPoly head = pres.table(i, j) * rest_poly;
    return head + CommPoly::variable(r, i) * oracle_derive_monomial(pres, rest, j);
}

CommPoly oracle_derive(const Presentation& pres, const CommPoly& p, std::size_t j) {
    CommPoly sum(pres.gen_count());
    for (const auto& [e, c] : p.terms()) sum = sum + oracle_derive_monomial(pres, e, j) * c;
    return sum;
}

CommPoly random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_deg, unsigned terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-5, 5);
    CommPoly p(nvars);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        unsigned budget = deg(rng);
        std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
        for (unsigned k = 0; k < budget; ++k) e[pick(rng)] += 1;
        long c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(e, Rational(c));
    }
    return p;
}

double fd_partial(const SymExpr& f, const std::vector<double>& point, std::size_t j,
                  double step = 1e-5) {
    std::vector<double> hi = point, lo = point;
    hi[j] += step;
    lo[j] -= step;
    return (f.eval(hi) - f.eval(lo)) / (2 * step);
}

void check_realizations(const PresentationPtr& pres, const std::vector<double>& lo,
                        const std::vector<double>& hi, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::uniform_real_distribution<double>> dists;
    for (std::size_t j = 0; j < pres->deriv_count(); ++j)
        dists.emplace_back(lo[j], hi[j]);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> point;
        for (auto& dist : dists) point.push_back(dist(rng));
        for (std::size_t i = 0; i < pres->gen_count(); ++i) {
            SymExpr fi = pres->realizations()[i];
            for (std::size_t j = 0; j < pres->deriv_count(); ++j) {
                double fd = fd_partial(fi, point, j);
                double table = pres->realize(pres->table(i, j), VarBlock::X).eval(point);
                CHECK(std::abs(fd - table) <= 1e-6);
            }
        }
    }
}

}  // namespace

TEST_CASE("chain rule through the derivation table") {
    auto pres = exp_circle_presentation();
    const std::size_t r = 3;
    CommPoly F1 = CommPoly::variable(r, 0);
    CommPoly F2 = CommPoly::variable(r, 1);
    CommPoly F3 = CommPoly::variable(r, 2);

    CHECK(pres->derive(F3, 0) == F1 * F3 * Rational(2));
    CHECK(pres->derive(CommPoly(r, Rational(5)), 0).is_zero());
    CHECK(pres->derive(CommPoly(r, Rational(5)), 1).is_zero());
    CHECK(pres->derive(F1 * F2, 1) == F1);
    CHECK(pres->derive(F1 * F2, 1) == oracle_derive(*pres, F1 * F2, 1));

    CHECK_THROWS(pres->derive(F1, 2));
}

TEST_CASE("derive agrees with the product rule oracle on random polynomials") {
    auto pres = exp_circle_presentation();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        CommPoly p = random_poly(rng, 3, 4, 4);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(pres->derive(p, j) == oracle_derive(*pres, p, j));
    }
}

TEST_CASE("derive is linear and satisfies the Leibniz rule") {
    auto pres = exp_circle_presentation();
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        CommPoly p = random_poly(rng, 3, 4, 3);
        CommPoly q = random_poly(rng, 3, 4, 3);
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(pres->derive(p * q, j) == pres->derive(p, j) * q + p * pres->derive(q, j));
            CHECK(pres->derive(p * Rational(3, 7) + q * Rational(-2), j) ==
                  pres->derive(p, j) * Rational(3, 7) + pres->derive(q, j) * Rational(-2));
        }
    }
}

TEST_CASE("validate accepts the stock presentations") {
    CHECK(exp_circle_presentation()->validate().ok);
    CHECK(double_drop_presentation()->validate().ok);
    CHECK(snake_presentation()->validate().ok);
    CHECK(coordinate_presentation(3)->validate().ok);
    CHECK(weyl_presentation(2)->validate().ok);  // empty table
}

TEST_CASE("validate reports the first non-commuting pair") {
    // d1 F1 = F2, d2 F1 = 0, d1 F2 = 0, d2 F2 = 1:
    // d2 d1 F1 = 1 but d1 d2 F1 = 0.
    const std::size_t r = 2;
    std::vector<std::vector<CommPoly>> table(r, std::vector<CommPoly>(2, CommPoly(r)));
    table[0][0] = CommPoly::variable(r, 1);
    table[1][1] = CommPoly(r, Rational(1));
    Presentation pres({"f1", "f2"}, {"d1", "d2"}, table);
    auto report = pres.validate();
    CHECK_FALSE(report.ok);
    CHECK(report.gen_index == 1);
    CHECK(report.deriv_j == 1);
    CHECK(report.deriv_l == 2);
}

TEST_CASE("realizations are consistent with the derivation table") {
    check_realizations(exp_circle_presentation(), {-1.0, -1.0}, {1.0, 1.0}, 101);
    check_realizations(double_drop_presentation(), {0.0, -1.0}, {3.14159, 1.0}, 102);
    check_realizations(snake_presentation(), {-3.0, -1.5}, {5.0, 1.5}, 103);
    check_realizations(coordinate_presentation(2), {-2.0, -2.0}, {2.0, 2.0}, 104);
}

TEST_CASE("table constructor validates shapes") {
    CHECK_THROWS(Presentation({"f1"}, {"d1"}, {}));
    CHECK_THROWS(Presentation({"f1"}, {"d1", "d2"},
                              {{CommPoly(1)}}));
}
