#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

std::vector<double> degree_centrality(const Graph& g);

/// Power iteration with uniform teleport; dangling mass is redistributed
/// uniformly. Converges to l1 residual < tol; the result sums to 1.
std::vector<double> pagerank(const Graph& g, double damping = 0.85, double tol = 1e-9);

/// Betweenness estimate from `samples` distinct uniformly random pivots
/// (all nodes once samples >= n), single-source dependency accumulation per
/// pivot, scaled by n / pivots. samples == n gives the exact values.
std::vector<double> approx_betweenness(const Graph& g, std::uint32_t samples,
                                       std::uint64_t seed);

/// Spearman rank correlation: midranks, then Pearson. Throws
/// UndefinedMeasureError when either side has zero rank variance.
double spearman_rho(std::span<const double> a, std::span<const double> b);

}  // namespace backbone
