#include "backbone/correlation.hpp"

#include <cmath>
#include <limits>

#include "backbone/centrality.hpp"
#include "backbone/community.hpp"
#include "backbone/errors.hpp"
#include "backbone/filtering.hpp"

namespace backbone {

CorrelationMatrix score_correlation_matrix(const Graph& g,
                                           const std::vector<std::string>& tags,
                                           std::uint64_t seed,
                                           const ScorerOptions& options) {
    if (tags.size() < 2)
        throw InvalidParameterError("correlation needs at least two methods");
    if (g.num_edges() < 2)
        throw InvalidParameterError("correlation needs at least two edges");

    ScorerOptions opts = options;
    opts.seed = seed;

    std::vector<std::vector<double>> columns;
    columns.reserve(tags.size());
    for (const auto& tag : tags) {
        const MethodSpec spec = MethodSpec::parse(tag, /*allow_mod=*/true);
        if (spec.base == "mod") {
            // Same-community indicator under one seeded Louvain run.
            const Partition p = louvain(g, seed);
            std::vector<double> column(g.num_edges());
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                auto [u, v] = g.edge(e);
                column[e] = p[u] == p[v] ? 1.0 : 0.0;
            }
            columns.push_back(std::move(column));
            continue;
        }
        EdgeScore score = compute_edge_score(g, spec.base, opts);
        if (spec.local) score = localize(g, score, opts.workers);
        columns.push_back(std::move(score.values));
    }

    const std::size_t k = tags.size();
    CorrelationMatrix matrix;
    matrix.labels = tags;
    matrix.rho.assign(k, std::vector<double>(k, 1.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            double rho;
            try {
                rho = spearman_rho(columns[i], columns[j]);
            } catch (const UndefinedMeasureError&) {
                rho = std::numeric_limits<double>::quiet_NaN();
            }
            matrix.rho[i][j] = rho;
            matrix.rho[j][i] = rho;
        }
    }
    return matrix;
}

}  // namespace backbone
