#pragma once

// Brute-force reference implementations used only by tests. Everything here
// is written from the measure definitions, independent of the library's
// algorithms, and meant for small inputs.

#include <cstdint>
#include <span>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/partition.hpp"

namespace oracles {

using backbone::Graph;
using backbone::NodeId;
using backbone::Partition;

/// Per-edge triangle counts by enumerating all node triples.
std::vector<std::uint64_t> triangles_by_triples(const Graph& g);

/// Per-edge / per-node 4-cycle counts by direct enumeration.
std::vector<std::uint64_t> quadrangles_per_edge_by_enumeration(const Graph& g);
std::vector<std::uint64_t> quadrangles_per_node_by_enumeration(const Graph& g);

/// Jaccard via explicit neighbor set operations.
std::vector<double> jaccard_by_sets(const Graph& g);

/// Simmelian strength by materializing every rank prefix as a set.
std::vector<double> simmelian_by_prefix_sets(const Graph& g,
                                             std::span<const double> source);

/// Competition ranks straight from the definition (1 + number of strictly
/// greater values).
std::vector<std::uint32_t> ranks_by_counting(std::span<const double> values);

/// Component labels by union-find.
std::vector<std::uint32_t> components_by_union_find(const Graph& g);

/// Diameter of the largest component via all-pairs BFS.
std::uint32_t diameter_by_apsp(const Graph& g);

/// Average local clustering from per-node neighbor-pair probing.
double clustering_by_probing(const Graph& g);

/// Exact betweenness, textbook Brandes with predecessor lists.
std::vector<double> betweenness_by_brandes(const Graph& g);

/// PageRank by dense fixed-point iteration on the full matrix.
std::vector<double> pagerank_by_dense_iteration(const Graph& g, double damping,
                                                int iterations);

/// Spearman via independent midranks and a direct Pearson on sample means.
double spearman_by_definition(std::span<const double> a, std::span<const double> b);

/// Modularity from the pairwise definition: (1/2m) sum_ij (A_ij -
/// d_i d_j / 2m) [c_i == c_j].
double modularity_by_pairs(const Graph& g, const Partition& p);

/// Conductance / fragmentation from per-subset scans.
double conductance_by_scan(const Graph& g, const Partition& p);
double fragmentation_by_scan(const Graph& g, const Partition& p);

/// Adjusted Rand from the four pairwise agreement counts.
double ari_by_pair_counts(const Partition& a, const Partition& b);

}  // namespace oracles
