#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

/// Symmetric Spearman correlation matrix between scoring methods. Cells
/// whose correlation is undefined (zero rank variance) hold NaN.
struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rho;
};

/// Scores the graph once per tag and correlates the per-edge vectors.
/// Tags are method tags ("js", "local:ad", ...) plus the pseudo-tag "mod":
/// a 0/1 indicator of whether both endpoints share a Louvain community.
CorrelationMatrix score_correlation_matrix(const Graph& g,
                                           const std::vector<std::string>& tags,
                                           std::uint64_t seed,
                                           const ScorerOptions& options = {});

}  // namespace backbone
