#include "backbone/clustering_coefficient.hpp"

#include "backbone/triangles.hpp"

namespace backbone {

double avg_local_clustering(const Graph& g, int workers) {
    const NodeId n = g.num_nodes();
    if (n == 0) return 0.0;
    const auto per_node = triangles_per_node(g, count_triangles(g, workers));
    double sum = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const double d = g.degree(v);
        if (d >= 2) sum += 2.0 * static_cast<double>(per_node[v]) / (d * (d - 1.0));
    }
    return sum / static_cast<double>(n);
}

}  // namespace backbone
