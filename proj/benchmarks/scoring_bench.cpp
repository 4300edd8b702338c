#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "backbone/filtering.hpp"
#include "backbone/generators.hpp"
#include "backbone/graph.hpp"
#include "backbone/scoring.hpp"
#include "backbone/triangles.hpp"

namespace {

using backbone::Graph;

// One shared benchmark graph per size: planted partition, communities of a
// hundred nodes, average degree about 20 with half of it internal.
const Graph& bench_graph(std::uint32_t communities) {
    static std::map<std::uint32_t, Graph> cache;
    auto it = cache.find(communities);
    if (it == cache.end()) {
        backbone::PlantedPartitionSpec spec;
        spec.communities = communities;
        spec.nodes_per_community = 100;
        spec.p_in = 0.101;
        spec.p_out = 0.1 / (communities - 1);
        spec.seed = 4242;
        it = cache.emplace(communities, backbone::generate_planted_partition(spec).graph)
                 .first;
    }
    return it->second;
}

void score_method(benchmark::State& state, const char* tag) {
    const Graph& g = bench_graph(static_cast<std::uint32_t>(state.range(0)));
    backbone::ScorerOptions options;
    options.seed = 1;
    options.workers = 1;
    for (auto _ : state) {
        const backbone::EdgeScore score = backbone::compute_edge_score(g, tag, options);
        benchmark::DoNotOptimize(score.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}

void BM_ScoreRandomEdge(benchmark::State& state) { score_method(state, "re"); }
void BM_ScoreTriangles(benchmark::State& state) { score_method(state, "tri"); }
void BM_ScoreJaccard(benchmark::State& state) { score_method(state, "js"); }
void BM_ScoreSimmelian(benchmark::State& state) { score_method(state, "ts"); }
void BM_ScoreQuadrilateral(benchmark::State& state) { score_method(state, "qls"); }
void BM_ScoreForestFire(benchmark::State& state) { score_method(state, "eff"); }
void BM_ScoreAlgebraicDistance(benchmark::State& state) { score_method(state, "ad"); }
void BM_ScoreLocalDegree(benchmark::State& state) { score_method(state, "ld"); }

void BM_Localize(benchmark::State& state) {
    const Graph& g = bench_graph(static_cast<std::uint32_t>(state.range(0)));
    backbone::ScorerOptions options;
    options.seed = 1;
    options.workers = 1;
    const backbone::EdgeScore raw = backbone::compute_edge_score(g, "js", options);
    for (auto _ : state) {
        const backbone::EdgeScore local = backbone::localize(g, raw, 1);
        benchmark::DoNotOptimize(local.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}

void BM_FilterByRatio(benchmark::State& state) {
    const Graph& g = bench_graph(static_cast<std::uint32_t>(state.range(0)));
    backbone::ScorerOptions options;
    options.seed = 1;
    options.workers = 1;
    const backbone::EdgeScore score = backbone::compute_edge_score(g, "ld", options);
    for (auto _ : state) {
        const backbone::SparsificationResult result =
            backbone::filter_by_ratio(g, score, 0.5, 1);
        benchmark::DoNotOptimize(result.subgraph.num_edges());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}

BENCHMARK(BM_ScoreRandomEdge)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreTriangles)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreJaccard)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreSimmelian)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreQuadrilateral)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreForestFire)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreAlgebraicDistance)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreLocalDegree)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Localize)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FilterByRatio)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
