#include "backbone/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/rng.hpp"

namespace backbone {

namespace {

// Weighted multigraph used across coarsening levels. Adjacency stores both
// directions without self-loops; loop weight is kept per node. volume =
// weighted degree + twice the loop weight; total_weight counts every
// undirected edge (loops included) once.
struct WeightedGraph {
    NodeId n = 0;
    std::vector<std::size_t> offsets;
    std::vector<NodeId> adj;
    std::vector<double> weight;
    std::vector<double> loop;
    std::vector<double> volume;
    double total_weight = 0.0;
};

WeightedGraph lift(const Graph& g) {
    WeightedGraph wg;
    wg.n = g.num_nodes();
    wg.offsets.assign(static_cast<std::size_t>(wg.n) + 1, 0);
    for (NodeId v = 0; v < wg.n; ++v) wg.offsets[v + 1] = wg.offsets[v] + g.degree(v);
    wg.adj.resize(wg.offsets[wg.n]);
    wg.weight.assign(wg.adj.size(), 1.0);
    wg.loop.assign(wg.n, 0.0);
    wg.volume.resize(wg.n);
    for (NodeId v = 0; v < wg.n; ++v) {
        const auto nbrs = g.neighbors(v);
        std::copy(nbrs.begin(), nbrs.end(), wg.adj.begin() + wg.offsets[v]);
        wg.volume[v] = g.degree(v);
    }
    wg.total_weight = g.num_edges();
    return wg;
}

// One round of randomized local moving. comm is updated in place; returns
// whether any node moved.
bool local_moving(const WeightedGraph& wg, std::vector<std::uint32_t>& comm, Rng& rng) {
    const NodeId n = wg.n;
    std::vector<double> comm_volume(n, 0.0);
    for (NodeId v = 0; v < n; ++v) comm_volume[comm[v]] += wg.volume[v];

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const double w_total = wg.total_weight;
    std::vector<double> weight_to(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool any_moved = false;
    bool moved_this_pass = true;
    constexpr double kGainEps = 1e-12;

    while (moved_this_pass) {
        moved_this_pass = false;
        for (NodeId v : order) {
            const std::uint32_t home = comm[v];
            touched.clear();
            for (std::size_t i = wg.offsets[v]; i < wg.offsets[v + 1]; ++i) {
                const std::uint32_t c = comm[wg.adj[i]];
                if (weight_to[c] == 0.0) touched.push_back(c);
                weight_to[c] += wg.weight[i];
            }
            const double vol_v = wg.volume[v];
            const double w_home = weight_to[home];
            // Move only on strictly positive gain; the first community of a
            // tied gain wins, which is deterministic because the candidate
            // order comes from the adjacency layout.
            double best_gain = kGainEps;
            std::uint32_t best = home;
            for (std::uint32_t c : touched) {
                if (c == home) continue;
                const double gain =
                    (weight_to[c] - w_home) / w_total -
                    vol_v * (comm_volume[c] - comm_volume[home] + vol_v) /
                        (2.0 * w_total * w_total);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            for (std::uint32_t c : touched) weight_to[c] = 0.0;
            if (best != home) {
                comm_volume[home] -= vol_v;
                comm_volume[best] += vol_v;
                comm[v] = best;
                moved_this_pass = true;
                any_moved = true;
            }
        }
    }
    return any_moved;
}

// Renumbers community labels to [0, k) by first appearance.
std::uint32_t compact_labels(std::vector<std::uint32_t>& comm) {
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    dense.reserve(comm.size());
    std::uint32_t k = 0;
    for (auto& c : comm) {
        auto [it, inserted] = dense.try_emplace(c, k);
        if (inserted) ++k;
        c = it->second;
    }
    return k;
}

WeightedGraph coarsen(const WeightedGraph& wg, const std::vector<std::uint32_t>& comm,
                      std::uint32_t k) {
    WeightedGraph coarse;
    coarse.n = k;
    coarse.loop.assign(k, 0.0);
    coarse.volume.assign(k, 0.0);
    coarse.total_weight = wg.total_weight;

    std::vector<std::vector<std::pair<NodeId, double>>> nbr(k);
    for (NodeId v = 0; v < wg.n; ++v) {
        const std::uint32_t cv = comm[v];
        coarse.loop[cv] += wg.loop[v];
        for (std::size_t i = wg.offsets[v]; i < wg.offsets[v + 1]; ++i) {
            const NodeId w = wg.adj[i];
            if (w < v) continue;  // one direction per pair; loops never appear here
            const std::uint32_t cw = comm[w];
            if (cv == cw)
                coarse.loop[cv] += wg.weight[i];
            else {
                nbr[cv].emplace_back(cw, wg.weight[i]);
                nbr[cw].emplace_back(cv, wg.weight[i]);
            }
        }
    }
    coarse.offsets.assign(static_cast<std::size_t>(k) + 1, 0);
    for (std::uint32_t c = 0; c < k; ++c) {
        auto& list = nbr[c];
        std::sort(list.begin(), list.end());
        // Merge parallel edges.
        std::size_t out = 0;
        for (std::size_t i = 0; i < list.size();) {
            double w = 0.0;
            std::size_t j = i;
            while (j < list.size() && list[j].first == list[i].first) w += list[j++].second;
            list[out++] = {list[i].first, w};
            i = j;
        }
        list.resize(out);
        coarse.offsets[c + 1] = coarse.offsets[c] + out;
    }
    coarse.adj.resize(coarse.offsets[k]);
    coarse.weight.resize(coarse.offsets[k]);
    for (std::uint32_t c = 0; c < k; ++c) {
        std::size_t at = coarse.offsets[c];
        double strength = 0.0;
        for (auto [w, wt] : nbr[c]) {
            coarse.adj[at] = w;
            coarse.weight[at++] = wt;
            strength += wt;
        }
        coarse.volume[c] = strength + 2.0 * coarse.loop[c];
    }
    return coarse;
}

}  // namespace

LouvainResult louvain_with_refinement(const Graph& g, std::uint64_t seed) {
    const NodeId n = g.num_nodes();
    LouvainResult result;
    if (n == 0) {
        result.partition = Partition(std::vector<std::uint32_t>{});
        result.modularity_before_refinement = std::numeric_limits<double>::quiet_NaN();
        result.modularity_after_refinement = result.modularity_before_refinement;
        return result;
    }
    std::vector<std::uint32_t> flat(n);
    std::iota(flat.begin(), flat.end(), 0);
    if (g.num_edges() == 0) {
        // No gain is ever positive; everyone stays singleton.
        result.partition = Partition(flat);
        result.modularity_before_refinement = std::numeric_limits<double>::quiet_NaN();
        result.modularity_after_refinement = result.modularity_before_refinement;
        return result;
    }

    Rng rng(seed);
    WeightedGraph level = lift(g);
    std::vector<std::uint32_t> comm(level.n);
    std::iota(comm.begin(), comm.end(), 0);

    while (true) {
        const bool moved = local_moving(level, comm, rng);
        const std::uint32_t k = compact_labels(comm);
        for (auto& c : flat) c = comm[c];
        if (!moved || k == level.n) break;
        level = coarsen(level, comm, k);
        comm.resize(k);
        std::iota(comm.begin(), comm.end(), 0);
    }

    result.modularity_before_refinement = modularity(g, Partition(flat));

    // Refinement: local moving on the finest level, seeded with the coarse
    // assignment. Starting from a valid partition, moves only apply on
    // strictly positive gain, so modularity cannot drop.
    WeightedGraph fine = lift(g);
    local_moving(fine, flat, rng);
    compact_labels(flat);
    result.partition = Partition(flat);
    result.modularity_after_refinement = modularity(g, result.partition);
    return result;
}

Partition louvain(const Graph& g, std::uint64_t seed) {
    return louvain_with_refinement(g, seed).partition;
}

double modularity(const Graph& g, const Partition& p) {
    if (p.num_nodes() != g.num_nodes())
        throw InvalidParameterError("partition does not match the graph");
    const double m = g.num_edges();
    if (m == 0) throw UndefinedMeasureError("modularity of an edgeless graph");

    const std::uint32_t k = p.num_subsets();
    std::vector<double> internal(k, 0.0), volume(k, 0.0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (p[u] == p[v]) internal[p[u]] += 1.0;
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) volume[p[v]] += g.degree(v);

    double q = 0.0;
    for (std::uint32_t c = 0; c < k; ++c) {
        const double frac = volume[c] / (2.0 * m);
        q += internal[c] / m - frac * frac;
    }
    return q;
}

double avg_conductance(const Graph& g, const Partition& p) {
    if (p.num_nodes() != g.num_nodes())
        throw InvalidParameterError("partition does not match the graph");
    const std::uint32_t k = p.num_subsets();
    if (k == 0) throw InvalidParameterError("partition is empty");

    std::vector<double> cut(k, 0.0), volume(k, 0.0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (p[u] != p[v]) {
            cut[p[u]] += 1.0;
            cut[p[v]] += 1.0;
        }
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) volume[p[v]] += g.degree(v);

    const double total = 2.0 * static_cast<double>(g.num_edges());
    double sum = 0.0;
    for (std::uint32_t c = 0; c < k; ++c) {
        const double denom = std::min(volume[c], total - volume[c]);
        sum += denom == 0.0 ? 0.0 : cut[c] / denom;
    }
    return sum / k;
}

double avg_fragmentation(const Graph& g, const Partition& p) {
    if (p.num_nodes() != g.num_nodes())
        throw InvalidParameterError("partition does not match the graph");
    const std::uint32_t k = p.num_subsets();
    if (k == 0) throw InvalidParameterError("partition is empty");

    // BFS over each subset's induced subgraph.
    const NodeId n = g.num_nodes();
    std::vector<bool> visited(n, false);
    std::vector<NodeId> queue;
    std::vector<NodeId> largest(k, 0), size(k, 0);
    for (NodeId v = 0; v < n; ++v) ++size[p[v]];
    for (NodeId s = 0; s < n; ++s) {
        if (visited[s]) continue;
        const std::uint32_t c = p[s];
        visited[s] = true;
        queue.assign(1, s);
        NodeId count = 0;
        while (!queue.empty()) {
            const NodeId v = queue.back();
            queue.pop_back();
            ++count;
            for (NodeId w : g.neighbors(v)) {
                if (!visited[w] && p[w] == c) {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        largest[c] = std::max(largest[c], count);
    }
    double sum = 0.0;
    for (std::uint32_t c = 0; c < k; ++c)
        sum += 1.0 - static_cast<double>(largest[c]) / static_cast<double>(size[c]);
    return sum / k;
}

double adjusted_rand(const Partition& a, const Partition& b) {
    if (a.num_nodes() != b.num_nodes())
        throw InvalidParameterError("partitions cover different node sets");
    const NodeId n = a.num_nodes();
    if (n < 2) throw UndefinedMeasureError("adjusted rand needs at least two nodes");

    const std::uint32_t ka = a.num_subsets(), kb = b.num_subsets();
    std::unordered_map<std::uint64_t, std::uint64_t> cont;
    cont.reserve(std::max(ka, kb) * 2);
    for (NodeId v = 0; v < n; ++v)
        ++cont[static_cast<std::uint64_t>(a[v]) * kb + b[v]];

    auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
    std::vector<std::uint64_t> row(ka, 0), col(kb, 0);
    double sum_cells = 0.0;
    for (auto [key, count] : cont) {
        row[key / kb] += count;
        col[key % kb] += count;
        sum_cells += choose2(static_cast<double>(count));
    }
    double sum_rows = 0.0, sum_cols = 0.0;
    for (auto r : row) sum_rows += choose2(static_cast<double>(r));
    for (auto c : col) sum_cols += choose2(static_cast<double>(c));

    const double pairs = choose2(static_cast<double>(n));
    const double expected = sum_rows * sum_cols / pairs;
    const double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) return 1.0;  // both partitions degenerate
    return (sum_cells - expected) / (maximum - expected);
}

}  // namespace backbone
