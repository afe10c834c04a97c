#include <benchmark/benchmark.h>

#include "detrees/detrees.hpp"

using namespace detrees;

namespace {

Ideal minors_ideal(const Shape& sh) {
    Ideal I{ring_R(sh), {}};
    for (auto& m : nonzero_minors(sh)) I.gens.push_back(std::move(m.poly));
    return I;
}

void BM_BuchbergerMinors(benchmark::State& state) {
    Shape sh = shape_validate(6, 2, 2);
    Ideal I = minors_ideal(sh);
    TermOrder tau = diagonal_order(sh);
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(I, tau);
        benchmark::DoNotOptimize(gb.elements.size());
    }
}
BENCHMARK(BM_BuchbergerMinors);

void BM_ProductsGroebnerCheck(benchmark::State& state) {
    Shape sh = shape_validate(5, 2, 2);
    Ideal I2 = ideal_power(minors_ideal(sh), 2);
    TermOrder tau = diagonal_order(sh);
    for (auto _ : state) {
        SPairCheck spc = is_groebner_check(I2.gens, tau);
        benchmark::DoNotOptimize(spc.pass);
    }
}
BENCHMARK(BM_ProductsGroebnerCheck);

void BM_ReesKernelElimination(benchmark::State& state) {
    Shape sh = shape_validate(4, 1, 2);
    std::vector<std::pair<VariableId, Polynomial>> images;
    for (const auto& m : nonzero_minors(sh))
        images.push_back(
            {VariableId::y(m.i, m.j), m.poly.times_term(Monomial::variable(VariableId::t()), 1)});
    for (auto _ : state) {
        Ideal J = kernel_of_algebra_map(images);
        benchmark::DoNotOptimize(J.gens.size());
    }
}
BENCHMARK(BM_ReesKernelElimination);

void BM_HilbertReesLadder(benchmark::State& state) {
    Shape sh = shape_validate(7, 3, 2);
    Ladder Lp = ladder(sh, true);
    std::vector<Polynomial> minors = ladder_minors(Lp);
    TermOrder nu = ladder_diagonal_order(Lp);
    std::vector<Monomial> lms;
    for (const auto& m : minors) lms.push_back(m.leading_term(nu).mono);
    MonomialIdeal in(ring_S(sh), lms);
    for (auto _ : state) {
        HilbertRecord rec = hilbert_record(in);
        benchmark::DoNotOptimize(rec.mult);
    }
}
BENCHMARK(BM_HilbertReesLadder);

void BM_VerifySuiteSmall(benchmark::State& state) {
    Shape sh = shape_validate(4, 1, 2);
    for (auto _ : state) {
        std::vector<CheckReport> reports = run_all(sh);
        benchmark::DoNotOptimize(reports.size());
    }
}
BENCHMARK(BM_VerifySuiteSmall);

}  // namespace

BENCHMARK_MAIN();
