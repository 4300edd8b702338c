#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/partition.hpp"
#include "backbone/report.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

/// Which (expensive) measures a sweep evaluates per cell.
struct MeasureToggles {
    bool components = true;
    bool diameter = true;
    bool clustering = true;
    bool centralities = true;
    bool community = true;
};

struct SweepConfig {
    std::vector<MethodSpec> methods;
    std::vector<double> ratios;
    std::uint64_t seed = 1;
    std::uint32_t betweenness_samples = 64;
    MeasureToggles measures;
    ScorerOptions scorer;
};

/// Scores the graph once per method (timed), then filters and evaluates
/// every ratio against the original. Community measures compare against the
/// ground truth when given, otherwise against one seeded Louvain run on the
/// original. Rows come out methods-major in configuration order.
std::vector<AnalysisRecord> run_sweep(const Graph& g,
                                      const std::optional<Partition>& ground_truth,
                                      const SweepConfig& config);

}  // namespace backbone
