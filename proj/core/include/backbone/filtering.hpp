#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "backbone/edge_score.hpp"
#include "backbone/graph.hpp"

namespace backbone {

/// Competition ranks, descending: rank[i] = 1 + |{j : values[j] > values[i]}|.
/// Tied values share the best rank of their group.
std::vector<std::uint32_t> rank_with_ties(std::span<const double> values);

/// Local filtering transform: each endpoint ranks its incident edges by the
/// raw score (descending, ties share the best rank) and assigns
/// 1 - log(r)/log(d) (1 for r == 1); an edge keeps the better endpoint
/// value. Makes scores comparable across differently dense regions. The
/// result carries the tag "local:<raw tag>".
EdgeScore localize(const Graph& g, const EdgeScore& raw, int workers = 0);

struct SparsificationResult {
    std::vector<bool> kept;        // per original edge id
    Graph subgraph;                // same node set, kept edges only
    std::vector<EdgeId> edge_map;  // original id -> new id, kNoEdge if dropped
};

/// Keeps exactly round(ratio * m) edges (half-up), preferring higher scores.
/// Ties are broken by a global random permutation drawn from tiebreak_seed,
/// so backbones for the same seed are nested across ratios. ratio outside
/// [0, 1] throws InvalidParameterError.
SparsificationResult filter_by_ratio(const Graph& g, const EdgeScore& score, double ratio,
                                     std::uint64_t tiebreak_seed);

namespace detail {

/// Shared core of localize() and the local degree scorer: per node, ranks
/// the incident slots by slot_keys (descending, ties share the best rank),
/// maps rank r at degree d to 1 - log(r)/log(d), and keeps the per-edge
/// maximum. slot_keys is indexed like the CSR adjacency.
std::vector<double> local_scores_from_slot_keys(const Graph& g,
                                                std::span<const double> slot_keys,
                                                int workers);

}  // namespace detail

}  // namespace backbone
