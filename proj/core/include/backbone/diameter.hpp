#pragma once

#include <cstdint>

#include "backbone/graph.hpp"

namespace backbone {

/// Exact diameter of the largest connected component, via BFS bound
/// tightening. An edgeless graph throws UndefinedMeasureError.
std::uint32_t exact_diameter(const Graph& g);

/// diameter(original) / diameter(sparse), both on their largest components.
double diameter_quotient(const Graph& sparse, const Graph& original);

}  // namespace backbone
