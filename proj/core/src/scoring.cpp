#include "backbone/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/filtering.hpp"
#include "backbone/parallel.hpp"
#include "backbone/rng.hpp"

namespace backbone {

EdgeScore score_random_edge(const Graph& g, std::uint64_t seed) {
    EdgeScore s;
    s.method = "re";
    s.values.resize(g.num_edges());
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& v : s.values) v = unit(rng);
    return s;
}

EdgeScore score_triangles(const Graph& g, const TriangleCounts& tc) {
    (void)g;
    EdgeScore s;
    s.method = "tri";
    s.values.assign(tc.per_edge.begin(), tc.per_edge.end());
    return s;
}

EdgeScore score_jaccard(const Graph& g, const TriangleCounts& tc) {
    EdgeScore s;
    s.method = "js";
    s.values.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        const double t = tc.per_edge[e];
        // |N(u) ∪ N(v)| counts both endpoints, which never lie in the
        // intersection, so the denominator stays >= 2.
        s.values[e] = t / (g.degree(u) + g.degree(v) - t);
    }
    return s;
}

EdgeScore score_quadrilateral_embeddedness(const Graph& g, const QuadrangleCounts& qc) {
    EdgeScore s;
    s.method = "qls";
    s.values.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        const double denom =
            std::sqrt(static_cast<double>(qc.per_node[u]) * static_cast<double>(qc.per_node[v]));
        s.values[e] = denom == 0.0 ? 0.0 : static_cast<double>(qc.per_edge[e]) / denom;
    }
    return s;
}

namespace {

// Every node's neighbors, sorted by the score of the connecting edge
// descending, with competition ranks (ties share the best rank). CSR layout
// parallel to the graph's offsets.
struct RankedNeighborhoods {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> nbr;
    std::vector<std::uint32_t> rank;
};

RankedNeighborhoods rank_neighborhoods(const Graph& g, std::span<const double> source,
                                       int threads) {
    const NodeId n = g.num_nodes();
    RankedNeighborhoods rn;
    rn.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId v = 0; v < n; ++v) rn.offsets[v + 1] = rn.offsets[v] + g.degree(v);
    rn.nbr.resize(rn.offsets[n]);
    rn.rank.resize(rn.offsets[n]);

#pragma omp parallel num_threads(threads)
    {
        std::vector<std::pair<double, NodeId>> local;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
            const NodeId v = static_cast<NodeId>(vi);
            const auto nbrs = g.neighbors(v);
            const auto eids = g.incident_edges(v);
            local.resize(nbrs.size());
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                local[i] = {source[eids[i]], nbrs[i]};
            // Descending score; neighbor id keeps ties deterministic, the
            // shared rank makes the order within a tie irrelevant.
            std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            const std::size_t base = rn.offsets[v];
            std::uint32_t rank = 1;
            for (std::size_t i = 0; i < local.size(); ++i) {
                if (i > 0 && local[i].first != local[i - 1].first)
                    rank = static_cast<std::uint32_t>(i + 1);
                rn.nbr[base + i] = local[i].second;
                rn.rank[base + i] = rank;
            }
        }
    }
    return rn;
}

}  // namespace

EdgeScore score_simmelian(const Graph& g, std::span<const double> ranking_source, int workers) {
    if (ranking_source.size() != g.num_edges())
        throw InvalidParameterError("ranking source does not match edge count");
    EdgeScore s;
    s.method = "ts";
    s.values.assign(g.num_edges(), 0.0);
    if (g.num_edges() == 0) return s;

    const int threads = resolve_workers(workers);
    const RankedNeighborhoods rn = rank_neighborhoods(g, ranking_source, threads);
    const NodeId n = g.num_nodes();

#pragma omp parallel num_threads(threads)
    {
        // Stamped membership marks; stamps are unique per edge, so the
        // arrays never need clearing.
        std::vector<EdgeId> in_u(n, kNoEdge), in_v(n, kNoEdge);
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t ei = 0; ei < static_cast<std::int64_t>(g.num_edges()); ++ei) {
            const EdgeId e = static_cast<EdgeId>(ei);
            auto [u, v] = g.edge(e);
            const std::size_t du = g.degree(u), dv = g.degree(v);
            std::size_t iu = 0, iv = 0, cu = 0, cv = 0, inter = 0;
            double best = 0.0;
            const std::uint32_t max_rank = static_cast<std::uint32_t>(std::max(du, dv));
            for (std::uint32_t k = 1; k <= max_rank; ++k) {
                while (iu < du && rn.rank[rn.offsets[u] + iu] <= k) {
                    const NodeId w = rn.nbr[rn.offsets[u] + iu];
                    in_u[w] = e;
                    if (in_v[w] == e) ++inter;
                    ++cu;
                    ++iu;
                }
                while (iv < dv && rn.rank[rn.offsets[v] + iv] <= k) {
                    const NodeId w = rn.nbr[rn.offsets[v] + iv];
                    in_v[w] = e;
                    if (in_u[w] == e) ++inter;
                    ++cv;
                    ++iv;
                }
                const std::size_t uni = cu + cv - inter;
                if (uni > 0) {
                    const double overlap = static_cast<double>(inter) / static_cast<double>(uni);
                    if (overlap > best) best = overlap;
                }
            }
            s.values[e] = best;
        }
    }
    return s;
}

EdgeScore score_simmelian(const Graph& g, const TriangleCounts& tc, int workers) {
    std::vector<double> src(tc.per_edge.begin(), tc.per_edge.end());
    return score_simmelian(g, src, workers);
}

EdgeScore score_local_degree(const Graph& g, int workers) {
    std::vector<double> slot_keys(2 * static_cast<std::size_t>(g.num_edges()));
    std::size_t at = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (NodeId w : g.neighbors(v)) slot_keys[at++] = g.degree(w);
    EdgeScore s;
    s.method = "ld";
    s.values = detail::local_scores_from_slot_keys(g, slot_keys, workers);
    return s;
}

MethodSpec MethodSpec::parse(const std::string& tag, bool allow_mod) {
    MethodSpec spec;
    std::string base = tag;
    if (base.rfind("local:", 0) == 0) {
        spec.local = true;
        base = base.substr(6);
    }
    static const char* kKnown[] = {"re", "tri", "js", "ts", "qls", "eff", "ad", "ld"};
    const bool known = std::any_of(std::begin(kKnown), std::end(kKnown),
                                   [&](const char* k) { return base == k; });
    if (!known && !(allow_mod && !spec.local && base == "mod"))
        throw InvalidParameterError("unknown method tag: " + tag);
    spec.base = base;
    return spec;
}

EdgeScore compute_edge_score(const Graph& g, const std::string& base_tag,
                             const ScorerOptions& options) {
    if (base_tag == "re") return score_random_edge(g, options.seed);
    if (base_tag == "tri") return score_triangles(g, count_triangles(g, options.workers));
    if (base_tag == "js") return score_jaccard(g, count_triangles(g, options.workers));
    if (base_tag == "ts")
        return score_simmelian(g, count_triangles(g, options.workers), options.workers);
    if (base_tag == "qls") return score_quadrilateral_embeddedness(g, count_quadrangles(g));
    if (base_tag == "eff") {
        ForestFireParams params;
        params.p = options.eff_p;
        params.target_burn_ratio = options.eff_target_burn_ratio;
        params.seed = options.seed;
        return score_edge_forest_fire(g, params, options.workers);
    }
    if (base_tag == "ad")
        return score_algebraic_distance(g, options.ad_systems, options.ad_iterations,
                                        options.seed, options.workers);
    if (base_tag == "ld") return score_local_degree(g, options.workers);
    throw InvalidParameterError("unknown method tag: " + base_tag);
}

}  // namespace backbone
