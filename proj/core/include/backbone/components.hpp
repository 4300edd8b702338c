#pragma once

#include "backbone/graph.hpp"
#include "backbone/partition.hpp"

namespace backbone {

/// Connected components, labeled in order of their smallest node id.
Partition connected_components(const Graph& g);

/// Size of the largest connected component (0 for the empty graph).
NodeId largest_component_size(const Graph& g);

/// |LCC(sparse)| / |LCC(original)|. Both graphs must share the node set;
/// an edgeless original has no meaningful baseline and throws
/// UndefinedMeasureError.
double largest_component_ratio(const Graph& sparse, const Graph& original);

}  // namespace backbone
