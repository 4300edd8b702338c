#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/parallel.hpp"
#include "backbone/rng.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

AlgebraicCoordinates compute_algebraic_coordinates(const Graph& g, int systems,
                                                   int iterations, std::uint64_t seed,
                                                   int workers) {
    if (systems < 1 || iterations < 0)
        throw InvalidParameterError("algebraic distance needs systems >= 1, iterations >= 0");

    const NodeId n = g.num_nodes();
    AlgebraicCoordinates ac;
    ac.systems = systems;
    ac.iterations = iterations;
    ac.omega = 0.5;
    ac.coords.resize(static_cast<std::size_t>(systems) * n);

    const int threads = resolve_workers(workers);
    std::vector<double> next(n);
    for (int s = 0; s < systems; ++s) {
        double* x = ac.coords.data() + static_cast<std::size_t>(s) * n;
        // One stream per system: the result does not depend on the worker
        // count, only on (seed, system).
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
        std::uniform_real_distribution<double> init(-0.5, 0.5);
        for (NodeId v = 0; v < n; ++v) x[v] = init(rng);

        for (int it = 0; it < iterations; ++it) {
#pragma omp parallel for schedule(static) num_threads(threads)
            for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
                const NodeId v = static_cast<NodeId>(vi);
                const auto nbrs = g.neighbors(v);
                if (nbrs.empty()) {
                    next[v] = x[v];
                    continue;
                }
                double sum = 0.0;
                for (NodeId w : nbrs) sum += x[w];
                next[v] = ac.omega * x[v] + (1.0 - ac.omega) * sum / nbrs.size();
            }
            std::copy(next.begin(), next.end(), x);
        }
    }
    return ac;
}

EdgeScore score_algebraic_distance(const Graph& g, int systems, int iterations,
                                   std::uint64_t seed, int workers) {
    const AlgebraicCoordinates ac =
        compute_algebraic_coordinates(g, systems, iterations, seed, workers);
    const NodeId n = g.num_nodes();

    EdgeScore s;
    s.method = "ad";
    s.values.resize(g.num_edges());
    double max_raw = 0.0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        double sq = 0.0;
        for (int sys = 0; sys < ac.systems; ++sys) {
            const double* x = ac.coords.data() + static_cast<std::size_t>(sys) * n;
            const double d = x[u] - x[v];
            sq += d * d;
        }
        const double raw = std::sqrt(sq);
        s.values[e] = raw;
        if (raw > max_raw) max_raw = raw;
    }
    // Invert so that close pairs score high; degenerate all-equal
    // coordinates mean every edge is equally close.
    for (auto& v : s.values) v = max_raw == 0.0 ? 1.0 : 1.0 - v / max_raw;
    return s;
}

}  // namespace backbone
