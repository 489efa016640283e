#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weylgp/boundary.hpp"
#include "weylgp/ordering.hpp"

using namespace weylgp;

namespace {

// Uniform samples of the boundary of [0,1]^d: one coordinate pinned to 0
// or 1, the others free.
std::vector<std::vector<double>> box_boundary_samples(std::size_t dim, std::size_t count,
                                                      unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
    std::uniform_int_distribution<int> side(0, 1);
    std::vector<std::vector<double>> samples;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<double> p(dim);
        for (auto& v : p) v = u(rng);
        p[axis(rng)] = side(rng);
        samples.push_back(std::move(p));
    }
    return samples;
}

double normal_derivative(const SymExpr& f, std::vector<double> p, std::size_t axis,
                         double step = 1e-6) {
    std::vector<double> hi = p, lo = p;
    hi[axis] += step;
    lo[axis] -= step;
    return (f.eval(hi) - f.eval(lo)) / (2 * step);
}

BoundarySpec box_spec(BoundaryKind kind, std::size_t dim) {
    BoundarySpec spec;
    spec.kind = kind;
    spec.dim = dim;
    spec.delta = Rational(1, 100);
    return spec;
}

}  // namespace

TEST_CASE("box parametrizations vanish on the boundary") {
    for (std::size_t dim : {1u, 2u}) {
        for (BoundaryKind kind :
             {BoundaryKind::DirichletBoxPoly, BoundaryKind::DirichletBoxExp,
              BoundaryKind::DirichletBoxSd, BoundaryKind::DirichletNeumannExp,
              BoundaryKind::DirichletNeumannSd}) {
            BoundaryResult b = build_boundary(box_spec(kind, dim));
            const SymExpr& entry = b.entries[0][0];
            for (const auto& p : box_boundary_samples(dim, 200, 11 + dim))
                CHECK(std::abs(entry.eval(p)) <= 1e-12);
        }
    }
}

TEST_CASE("Neumann variants also kill the normal derivative") {
    for (std::size_t dim : {1u, 2u}) {
        for (BoundaryKind kind :
             {BoundaryKind::DirichletNeumannExp, BoundaryKind::DirichletNeumannSd}) {
            BoundaryResult b = build_boundary(box_spec(kind, dim));
            const SymExpr& entry = b.entries[0][0];
            std::mt19937 rng(31);
            std::uniform_real_distribution<double> u(0.05, 0.95);
            for (int k = 0; k < 100; ++k) {
                std::vector<double> p(dim);
                for (auto& v : p) v = u(rng);
                std::size_t axis = static_cast<std::size_t>(k) % dim;
                p[axis] = k % 2 ? 1.0 : 0.0;
                CHECK(std::abs(normal_derivative(entry, p, axis)) <= 1e-5);
            }
        }
    }
}

TEST_CASE("smooth variants stay bounded by one on the box") {
    for (std::size_t dim : {1u, 2u}) {
        for (BoundaryKind kind :
             {BoundaryKind::DirichletBoxExp, BoundaryKind::DirichletBoxSd,
              BoundaryKind::DirichletNeumannExp, BoundaryKind::DirichletNeumannSd}) {
            BoundaryResult b = build_boundary(box_spec(kind, dim));
            const SymExpr& entry = b.entries[0][0];
            const std::size_t n = 101;
            std::size_t total = dim == 1 ? n : n * n;
            for (std::size_t idx = 0; idx < total; ++idx) {
                std::vector<double> p(dim);
                p[0] = static_cast<double>(idx % n) / (n - 1);
                if (dim == 2) p[1] = static_cast<double>(idx / n) / (n - 1);
                CHECK(std::abs(entry.eval(p)) <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("exp variant evaluates per the closed form") {
    BoundaryResult b = build_boundary(box_spec(BoundaryKind::DirichletBoxExp, 1));
    const SymExpr& entry = b.entries[0][0];
    CHECK(std::abs(entry.eval({0.0})) <= 1e-15);
    CHECK(entry.eval({0.5}) == doctest::Approx(1.0 - std::exp(-25.0)));
    CHECK(entry.eval({0.5}) > 0.0);
}

TEST_CASE("Neumann exp variant kills value and derivative at 0 and 1") {
    BoundaryResult b = build_boundary(box_spec(BoundaryKind::DirichletNeumannExp, 1));
    const SymExpr& entry = b.entries[0][0];
    SymExpr d = entry.diff(VarBlock::X, 0);
    for (double edge : {0.0, 1.0}) {
        CHECK(std::abs(entry.eval({edge})) <= 1e-12);
        CHECK(std::abs(d.eval({edge})) <= 1e-12);
    }
}

TEST_CASE("representable variants carry validated operator matrices") {
    for (std::size_t dim : {1u, 2u}) {
        for (BoundaryKind kind : {BoundaryKind::DirichletBoxPoly, BoundaryKind::DirichletBoxExp,
                                  BoundaryKind::DirichletNeumannExp}) {
            BoundarySpec spec = box_spec(kind, dim);
            spec.outputs = 2;
            BoundaryResult b = build_boundary(spec);
            REQUIRE(b.op.has_value());
            REQUIRE(b.presentation);
            CHECK(b.presentation->validate().ok);
            CHECK(b.op->rows() == 2);
            CHECK(b.op->cols() == 2);
            CHECK(b.op->at(0, 1).is_zero());

            // The operator entry realizes to the same function.
            CommPoly coeff(b.presentation->gen_count());
            for (const auto& [m, c] : b.op->at(0, 0).terms()) coeff.add_term(m.alpha, c);
            SymExpr realized = b.presentation->realize(coeff, VarBlock::X);
            std::mt19937 rng(7);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int k = 0; k < 50; ++k) {
                std::vector<double> p(dim);
                for (auto& v : p) v = u(rng);
                CHECK(realized.eval(p) == doctest::Approx(b.entries[0][0].eval(p)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("sd variants are numeric only") {
    for (BoundaryKind kind : {BoundaryKind::DirichletBoxSd, BoundaryKind::DirichletNeumannSd}) {
        BoundaryResult b = build_boundary(box_spec(kind, 2));
        CHECK(b.numeric_only);
        CHECK_FALSE(b.op.has_value());
    }
    CHECK_FALSE(build_boundary(box_spec(BoundaryKind::DirichletBoxSd, 1)).analytic);
    CHECK(build_boundary(box_spec(BoundaryKind::DirichletBoxSd, 1)).entries[0][0].non_smooth());
}

TEST_CASE("z-axis parametrizations") {
    BoundaryResult analytic = codim2_axis("analytic", Rational(1));
    REQUIRE(analytic.entries.size() == 1);
    REQUIRE(analytic.entries[0].size() == 1);
    for (double z : {-2.0, 0.0, 1.5})
        CHECK(std::abs(analytic.entries[0][0].eval({0.0, 0.0, z})) <= 1e-15);
    CHECK(analytic.entries[0][0].eval({1.0, 0.0, 0.0}) ==
          doctest::Approx(1.0 - std::exp(-1.0)));
    CHECK(analytic.analytic);
    REQUIRE(analytic.op.has_value());
    CHECK(analytic.presentation->validate().ok);

    BoundaryResult two_abs = codim2_axis("two-abs", Rational(1, 100));
    CHECK(two_abs.entries[0].size() == 2);
    CHECK_FALSE(two_abs.analytic);
    CHECK(two_abs.numeric_only);
    for (double z : {-1.0, 0.5})
        for (const auto& e : two_abs.entries[0])
            CHECK(std::abs(e.eval({0.0, 0.0, z})) <= 1e-15);

    BoundaryResult radial = codim2_axis("radial", Rational(1, 100));
    CHECK_FALSE(radial.analytic);
    CHECK(radial.numeric_only);

    CHECK_THROWS(codim2_axis("bogus", Rational(1)));
    CHECK_THROWS(codim2_axis("analytic", Rational(0)));
}

TEST_CASE("implicit presets expose exact region polynomials") {
    BoundarySpec spec;
    spec.kind = BoundaryKind::Implicit;
    spec.preset = "double-drop";
    spec.outputs = 2;
    BoundaryResult dd = build_boundary(spec);
    REQUIRE(dd.op.has_value());
    CHECK(dd.op->rows() == 2);
    // f = y^2 - sin(x)^4 at (pi/2, 0) is -1.
    CHECK(dd.entries[0][0].eval({M_PI / 2, 0.0}) == doctest::Approx(-1.0));
    CHECK(std::abs(dd.entries[0][0].eval({M_PI / 2, 1.0})) <= 1e-12);

    spec.preset = "snake";
    BoundaryResult sn = build_boundary(spec);
    REQUIRE(sn.op.has_value());
    CHECK(sn.presentation->validate().ok);
    // f vanishes on x = 3 sin y and on y = pi/2.
    double y = 0.4;
    CHECK(std::abs(sn.entries[0][0].eval({3 * std::sin(y), y})) <= 1e-12);
    CHECK(std::abs(sn.entries[0][0].eval({0.3, M_PI / 2})) <= 1e-12);
    CHECK(check_assumption(*sn.presentation,
                           MonomialOrdering::unit_degrevlex(7, 2)));

    spec.preset = "unknown";
    CHECK_THROWS(build_boundary(spec));
}

TEST_CASE("region helpers agree with the polynomials") {
    CHECK(double_drop_inside({M_PI / 2, 0.0}));
    CHECK_FALSE(double_drop_inside({M_PI / 2, 0.999}) == false);  // on boundary edge
    CHECK_FALSE(double_drop_inside({0.1, 0.9}));
    CHECK(snake_inside({0.0, 0.0}));
    CHECK_FALSE(snake_inside({4.9, 0.0}));
    CHECK(double_drop_box().size() == 2);
    CHECK(snake_box().size() == 2);
}
