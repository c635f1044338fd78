#include <benchmark/benchmark.h>

#include "kspoly/contextuality.hpp"
#include "kspoly/dataset.hpp"
#include "kspoly/geometry.hpp"
#include "kspoly/gf2code.hpp"
#include "kspoly/labeling.hpp"
#include "kspoly/projection.hpp"

using namespace kspoly;

namespace {

const PolytopeData& data(PolytopeId id) {
    static const PolytopeData d[] = {load_dataset(PolytopeId::Cell600), load_dataset(PolytopeId::Cell120),
                                     load_dataset(PolytopeId::Gosset421)};
    return d[static_cast<int>(id)];
}

BitMatrix profile(PolytopeId id) {
    return profile_matrix_mod2(build_profile_matrix(data(id).layout, data(id).generators));
}

void BM_BasisTable(benchmark::State& state) {
    const auto id = static_cast<PolytopeId>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_basis_table(data(id).layout, data(id).generators));
}
BENCHMARK(BM_BasisTable)->Arg(0)->Arg(1)->Arg(2);

void BM_Nullspace(benchmark::State& state) {
    const auto m = profile(static_cast<PolytopeId>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gf2_nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(1)->Arg(2);

void BM_MacWilliams(benchmark::State& state) {
    const auto m = profile(static_cast<PolytopeId>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(macwilliams_transform(dual_weight_distribution(m), m.cols()));
}
BENCHMARK(BM_MacWilliams)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnumerateOddWords(benchmark::State& state) {
    const auto spec = gf2_nullspace(profile(PolytopeId::Gosset421));
    const auto max_weight = static_cast<std::size_t>(state.range(0));
    std::uint64_t count = 0;
    for (auto _ : state) {
        CodewordEnumerator e(spec, max_weight, Parity::Odd);
        count = 0;
        while (e.next()) ++count;
    }
    state.counters["words"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateOddWords)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BasisCliques(benchmark::State& state) {
    const auto id = static_cast<PolytopeId>(state.range(0));
    const auto graph = id == PolytopeId::Gosset421 ? orthogonality_graph(e8_rays())
                       : id == PolytopeId::Cell600 ? orthogonality_graph(icosian_600cell())
                                                   : orthogonality_graph(build_120cell_rays());
    const int d = expected_shape(id).dimension;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_bases(graph, d));
}
BENCHMARK(BM_BasisCliques)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Labeling(benchmark::State& state) {
    const auto rays = e8_rays();
    const auto bases = enumerate_bases(orthogonality_graph(rays), 8);
    const auto table = build_basis_table(data(PolytopeId::Gosset421).layout, data(PolytopeId::Gosset421).generators);
    for (auto _ : state) benchmark::DoNotOptimize(match_labeling(bases, rays.size(), table));
}
BENCHMARK(BM_Labeling)->Unit(benchmark::kMillisecond);

void BM_CoxeterProjection(benchmark::State& state) {
    const auto rays = e8_rays();
    for (auto _ : state) benchmark::DoNotOptimize(coxeter_projection(rays));
}
BENCHMARK(BM_CoxeterProjection)->Unit(benchmark::kMillisecond);

void BM_KsSearch(benchmark::State& state) {
    const auto& d = data(PolytopeId::Cell600);
    const auto table = build_basis_table(d.layout, d.generators);
    const auto w = bind_word(parse_word("a"), d.generators, PolytopeId::Cell600);
    const auto bases = proof_from_word(table, w).bases();
    for (auto _ : state) benchmark::DoNotOptimize(find_ks_assignment(bases));
}
BENCHMARK(BM_KsSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
