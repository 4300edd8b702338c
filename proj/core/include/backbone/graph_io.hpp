#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/partition.hpp"

namespace backbone {

struct EdgeListLoadResult {
    Graph graph;
    /// compact id -> original label, ascending.
    std::vector<std::uint64_t> original_ids;
    /// original label -> compact id.
    std::unordered_map<std::uint64_t, NodeId> compact_ids;
    CanonicalizeStats stats;
};

/// Reads a whitespace-separated edge list: one edge per line as two integer
/// tokens, '#' starts a comment line, blank lines are skipped. Tokens past
/// the second one on a line are ignored. Node labels are compacted to
/// [0, n) in ascending label order.
EdgeListLoadResult load_edge_list(const std::string& path);

/// Writes "u v" per canonical edge, ascending by edge id, using compact ids.
void write_edge_list(const Graph& g, const std::string& path);

/// Reads "node community" per line (comments and blanks as above). Every
/// node of the graph must be assigned exactly once; labels are translated
/// through `compact_ids`.
Partition load_ground_truth(const std::string& path,
                            const std::unordered_map<std::uint64_t, NodeId>& compact_ids);

/// Same, for files whose node labels already are compact ids in [0, n).
Partition load_ground_truth(const std::string& path, NodeId n);

void write_ground_truth(const Partition& p, const std::string& path);

}  // namespace backbone
