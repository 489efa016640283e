#include <benchmark/benchmark.h>

#include <random>

#include "weylgp/boundary.hpp"
#include "weylgp/gp.hpp"
#include "weylgp/janet.hpp"
#include "weylgp/syzygy.hpp"

using namespace weylgp;

namespace {

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
        long c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    return p;
}

void BM_OreMultiply(benchmark::State& state) {
    auto pres = exp_circle_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(3, 2);
    std::mt19937 rng(1);
    std::vector<std::pair<OrePoly, OrePoly>> pairs;
    for (int i = 0; i < 64; ++i)
        pairs.emplace_back(random_scalar(rng, pres, ord, static_cast<unsigned>(state.range(0)), 5),
                           random_scalar(rng, pres, ord, static_cast<unsigned>(state.range(0)), 5));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(p.multiply(q));
    }
}
BENCHMARK(BM_OreMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_JanetBasisRotation(benchmark::State& state) {
    auto pres = coordinate_presentation(2);
    auto ord = MonomialOrdering::unit_degrevlex(2, 2);
    OrePoly gen = OrePoly::generator(pres, ord, 0).multiply(OrePoly::partial(pres, ord, 1)) -
                  OrePoly::generator(pres, ord, 1).multiply(OrePoly::partial(pres, ord, 0));
    for (auto _ : state) benchmark::DoNotOptimize(janet_basis({gen}, ord));
}
BENCHMARK(BM_JanetBasisRotation);

void BM_RightKernelDivergence(benchmark::State& state) {
    auto weyl2 = weyl_presentation(2);
    auto ord = MonomialOrdering::unit_degrevlex(0, 2);
    OperatorMatrix A(weyl2, ord, 1, 2);
    A.set(0, 0, OrePoly::partial(weyl2, ord, 0));
    A.set(0, 1, OrePoly::partial(weyl2, ord, 1));
    for (auto _ : state) benchmark::DoNotOptimize(right_kernel(A));
}
BENCHMARK(BM_RightKernelDivergence);

void BM_RegionIntersection(benchmark::State& state) {
    auto pres = double_drop_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(4, 2);
    OrePoly f = OrePoly::from_coeff(pres, ord, double_drop_poly());
    OperatorMatrix B1(pres, ord, 2, 1);
    B1.set(0, 0, OrePoly::partial(pres, ord, 1));
    B1.set(1, 0, -OrePoly::partial(pres, ord, 0));
    OperatorMatrix B2(pres, ord, 2, 2);
    B2.set(0, 0, f);
    B2.set(1, 1, f);
    for (auto _ : state) benchmark::DoNotOptimize(intersect_parametrizations(B1, B2));
}
BENCHMARK(BM_RegionIntersection);

void BM_PosteriorMean(benchmark::State& state) {
    auto pres = double_drop_presentation();
    auto ord = MonomialOrdering::unit_degrevlex(4, 2);
    OrePoly f = OrePoly::from_coeff(pres, ord, double_drop_poly());
    OperatorMatrix B1(pres, ord, 2, 1);
    B1.set(0, 0, OrePoly::partial(pres, ord, 1));
    B1.set(1, 0, -OrePoly::partial(pres, ord, 0));
    OperatorMatrix B2(pres, ord, 2, 2);
    B2.set(0, 0, f);
    B2.set(1, 1, f);
    auto [P, C] = intersect_parametrizations(B1, B2);
    GaussianProcess prior = pushforward(P, GaussianProcess::iid_se(2, P.cols()));
    DataSet data;
    data.observations = {{{M_PI / 2, 0.0}, 0, -1.0, 0.0}, {{M_PI / 2, 0.0}, 1, 0.0, 0.0}};
    PosteriorGP post(prior, data);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ux(0.0, M_PI), uy(-1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(post.mean({ux(rng), uy(rng)}));
}
BENCHMARK(BM_PosteriorMean);

}  // namespace

BENCHMARK_MAIN();
