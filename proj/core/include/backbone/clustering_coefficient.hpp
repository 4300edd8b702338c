#pragma once

#include "backbone/graph.hpp"

namespace backbone {

/// Average local clustering coefficient; nodes of degree < 2 contribute 0.
double avg_local_clustering(const Graph& g, int workers = 0);

}  // namespace backbone
