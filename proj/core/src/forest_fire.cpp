#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/parallel.hpp"
#include "backbone/rng.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

namespace {

// One fire: geometric spread from a random start node over unburnt
// neighbors. Burn marks are an epoch-stamped array owned by the caller, so
// consecutive fires need no clearing. Returns the number of edges burnt;
// visit() receives each burnt edge id.
std::uint32_t next_epoch(std::vector<std::uint32_t>& stamp, std::uint32_t epoch) {
    if (epoch == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(stamp.begin(), stamp.end(), 0);
        return 1;
    }
    return epoch + 1;
}

template <typename Visit>
std::uint64_t burn_one_fire(const Graph& g, double p, Rng& rng,
                            std::vector<std::uint32_t>& stamp, std::uint32_t epoch,
                            Visit&& visit) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<NodeId> pick_node(0, g.num_nodes() - 1);

    std::uint64_t burnt_edges = 0;
    std::deque<NodeId> queue;
    const NodeId start = pick_node(rng);
    stamp[start] = epoch;
    queue.push_back(start);
    std::vector<std::pair<NodeId, EdgeId>> candidates;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        candidates.clear();
        const auto nbrs = g.neighbors(v);
        const auto eids = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (stamp[nbrs[i]] != epoch) candidates.emplace_back(nbrs[i], eids[i]);
        while (true) {
            if (unit(rng) > p || candidates.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            const std::size_t j = pick(rng);
            const auto [w, e] = candidates[j];
            candidates[j] = candidates.back();
            candidates.pop_back();
            stamp[w] = epoch;
            queue.push_back(w);
            visit(e);
            ++burnt_edges;
        }
    }
    return burnt_edges;
}

}  // namespace

EdgeScore score_edge_forest_fire(const Graph& g, const ForestFireParams& params, int workers) {
    if (!(params.p >= 0.0 && params.p < 1.0))
        throw InvalidParameterError("forest fire p must lie in [0, 1)");
    if (!(params.target_burn_ratio > 0.0))
        throw InvalidParameterError("target burn ratio must be positive");

    EdgeScore s;
    s.method = "eff";
    s.values.assign(g.num_edges(), 0.0);
    if (g.num_nodes() == 0 || g.num_edges() == 0) return s;
    // Nothing ever burns without spread; the target would be unreachable.
    if (params.p == 0.0) return s;

    const double target = params.target_burn_ratio * static_cast<double>(g.num_edges());
    const int threads = resolve_workers(workers);

    if (threads == 1) {
        // Sequential path: one RNG stream, bitwise reproducible per seed.
        std::vector<std::uint64_t> counts(g.num_edges(), 0);
        std::vector<std::uint32_t> stamp(g.num_nodes(), 0);
        std::uint32_t epoch = 0;
        Rng rng(params.seed);
        std::uint64_t total = 0;
        while (static_cast<double>(total) < target) {
            epoch = next_epoch(stamp, epoch);
            total += burn_one_fire(g, params.p, rng, stamp, epoch,
                                   [&](EdgeId e) { ++counts[e]; });
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            s.values[e] = static_cast<double>(counts[e]);
        return s;
    }

    std::vector<std::atomic<std::uint64_t>> counts(g.num_edges());
    std::atomic<std::uint64_t> total{0};
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
        const int worker = omp_get_thread_num();
#else
        const int worker = 0;
#endif
        Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(worker)));
        std::vector<std::uint32_t> stamp(g.num_nodes(), 0);
        std::uint32_t epoch = 0;
        while (static_cast<double>(total.load(std::memory_order_relaxed)) < target) {
            epoch = next_epoch(stamp, epoch);
            const std::uint64_t burnt =
                burn_one_fire(g, params.p, rng, stamp, epoch, [&](EdgeId e) {
                    counts[e].fetch_add(1, std::memory_order_relaxed);
                });
            total.fetch_add(burnt, std::memory_order_relaxed);
        }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        s.values[e] = static_cast<double>(counts[e].load(std::memory_order_relaxed));
    return s;
}

}  // namespace backbone
