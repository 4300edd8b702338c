#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace backbone {

/// One sweep cell: a method evaluated at one keep ratio. NaN marks a
/// measure that is undefined or was not requested; it serializes as an
/// empty CSV field / JSON null.
struct AnalysisRecord {
    std::string method;  // base tag
    bool local = false;
    double ratio = 1.0;
    std::uint64_t kept_edges = 0;

    double largest_component_ratio = 0.0;
    double diameter_quotient = 0.0;
    double clustering_deviation = 0.0;
    double spearman_degree = 0.0;
    double spearman_betweenness = 0.0;
    double spearman_pagerank = 0.0;
    double conductance = 0.0;
    double conductance_change = 0.0;
    double fragmentation = 0.0;
    double ari = 0.0;

    double scoring_seconds = 0.0;  // last column, so data rows stay comparable
};

std::string report_csv(std::span<const AnalysisRecord> records);
std::string report_json(std::span<const AnalysisRecord> records);

/// "%.12g" with NaN mapped to the empty string.
std::string format_double(double value);

}  // namespace backbone
