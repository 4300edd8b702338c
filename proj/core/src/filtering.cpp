#include "backbone/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "backbone/errors.hpp"
#include "backbone/parallel.hpp"
#include "backbone/rng.hpp"

namespace backbone {

std::vector<std::uint32_t> rank_with_ties(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });
    std::vector<std::uint32_t> rank(n);
    std::uint32_t current = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && values[idx[i]] != values[idx[i - 1]])
            current = static_cast<std::uint32_t>(i + 1);
        rank[idx[i]] = current;
    }
    return rank;
}

namespace detail {

std::vector<double> local_scores_from_slot_keys(const Graph& g,
                                                std::span<const double> slot_keys,
                                                int workers) {
    const NodeId n = g.num_nodes();
    std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);

    std::vector<double> per_slot(slot_keys.size());
    const int threads = resolve_workers(workers);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint32_t> idx;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
            const NodeId v = static_cast<NodeId>(vi);
            const std::size_t base = offsets[v];
            const std::uint32_t d = g.degree(v);
            idx.resize(d);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
                if (slot_keys[base + a] != slot_keys[base + b])
                    return slot_keys[base + a] > slot_keys[base + b];
                return a < b;
            });
            const double log_d = d >= 2 ? std::log(static_cast<double>(d)) : 0.0;
            std::uint32_t rank = 1;
            for (std::uint32_t i = 0; i < d; ++i) {
                if (i > 0 && slot_keys[base + idx[i]] != slot_keys[base + idx[i - 1]])
                    rank = i + 1;
                // rank 1 scores 1; with d == 1 no other rank occurs, so
                // log_d is never used as a zero divisor.
                per_slot[base + idx[i]] =
                    rank == 1 ? 1.0 : 1.0 - std::log(static_cast<double>(rank)) / log_d;
            }
        }
    }

    // Per-edge maximum over the two endpoint slots.
    std::vector<double> values(g.num_edges(), 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto eids = g.incident_edges(v);
        for (std::size_t i = 0; i < eids.size(); ++i)
            values[eids[i]] = std::max(values[eids[i]], per_slot[offsets[v] + i]);
    }
    return values;
}

}  // namespace detail

EdgeScore localize(const Graph& g, const EdgeScore& raw, int workers) {
    if (raw.values.size() != g.num_edges())
        throw InvalidParameterError("score does not match edge count");
    std::vector<double> slot_keys(2 * static_cast<std::size_t>(g.num_edges()));
    std::size_t at = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (EdgeId e : g.incident_edges(v)) slot_keys[at++] = raw.values[e];
    EdgeScore s;
    s.method = "local:" + raw.method;
    s.values = detail::local_scores_from_slot_keys(g, slot_keys, workers);
    return s;
}

SparsificationResult filter_by_ratio(const Graph& g, const EdgeScore& score, double ratio,
                                     std::uint64_t tiebreak_seed) {
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw InvalidParameterError("ratio must lie in [0, 1]");
    if (score.values.size() != g.num_edges())
        throw InvalidParameterError("score does not match edge count");

    const EdgeId m = g.num_edges();
    // Half-up rounding of ratio * m.
    const auto target = static_cast<EdgeId>(std::llround(ratio * static_cast<double>(m)));

    // One seeded permutation as the secondary key: the induced total order
    // does not depend on the ratio, so smaller backbones nest in larger
    // ones for the same seed.
    std::vector<EdgeId> shuffle_pos(m);
    {
        std::vector<EdgeId> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        Rng rng(tiebreak_seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (EdgeId i = 0; i < m; ++i) shuffle_pos[perm[i]] = i;
    }
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        if (score.values[a] != score.values[b]) return score.values[a] > score.values[b];
        return shuffle_pos[a] < shuffle_pos[b];
    });

    SparsificationResult result;
    result.kept.assign(m, false);
    for (EdgeId i = 0; i < target; ++i) result.kept[order[i]] = true;
    result.subgraph = subgraph_by_mask(g, result.kept, &result.edge_map);
    return result;
}

}  // namespace backbone
