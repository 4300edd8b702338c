#pragma once

#include <cstdint>

#include "backbone/graph.hpp"
#include "backbone/partition.hpp"

namespace backbone {

struct LouvainResult {
    Partition partition;
    double modularity_before_refinement = 0.0;
    double modularity_after_refinement = 0.0;
};

/// Louvain modularity maximization: randomized local moving (order drawn
/// from `seed`) alternated with graph coarsening, then a refinement pass of
/// local moving on the finest level seeded with the coarse result. The
/// refinement never lowers modularity.
LouvainResult louvain_with_refinement(const Graph& g, std::uint64_t seed);

Partition louvain(const Graph& g, std::uint64_t seed);

/// Newman modularity. Throws UndefinedMeasureError on an edgeless graph.
double modularity(const Graph& g, const Partition& p);

/// Mean over the subsets of cut(C) / min(vol(C), vol(V \ C)); a subset with
/// either volume 0 contributes 0.
double avg_conductance(const Graph& g, const Partition& p);

/// Mean over the subsets of 1 - |LCC(G[C])| / |C|.
double avg_fragmentation(const Graph& g, const Partition& p);

/// Adjusted Rand index (permutation-model correction). Returns 1 when the
/// correction denominator vanishes. Throws UndefinedMeasureError for n < 2.
double adjusted_rand(const Partition& a, const Partition& b);

}  // namespace backbone
