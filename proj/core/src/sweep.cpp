#include "backbone/sweep.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "backbone/centrality.hpp"
#include "backbone/clustering_coefficient.hpp"
#include "backbone/community.hpp"
#include "backbone/components.hpp"
#include "backbone/diameter.hpp"
#include "backbone/errors.hpp"
#include "backbone/filtering.hpp"

namespace backbone {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Baseline {
    Partition reference;
    double conductance = kNaN;
    std::uint32_t lcc_size = 0;
    std::uint32_t diameter = 0;
    double clustering = 0.0;
    std::vector<double> degree, betweenness, pagerank_vec;
};

template <typename F>
double guarded(F&& f) {
    try {
        return f();
    } catch (const UndefinedMeasureError&) {
        return kNaN;
    }
}

}  // namespace

std::vector<AnalysisRecord> run_sweep(const Graph& g,
                                      const std::optional<Partition>& ground_truth,
                                      const SweepConfig& config) {
    if (g.num_edges() == 0) throw InvalidParameterError("sweep needs at least one edge");
    if (config.methods.empty()) throw InvalidParameterError("sweep needs at least one method");
    if (config.ratios.empty()) throw InvalidParameterError("sweep needs at least one ratio");
    if (ground_truth && ground_truth->num_nodes() != g.num_nodes())
        throw InvalidParameterError("ground truth does not match the graph");

    ScorerOptions scorer_options = config.scorer;
    scorer_options.seed = config.seed;

    // The reference partition is fixed once: ground truth when given, one
    // seeded Louvain run on the original otherwise.
    Baseline base;
    base.reference = ground_truth ? *ground_truth : louvain(g, config.seed);
    const auto& toggles = config.measures;
    if (toggles.components) base.lcc_size = largest_component_size(g);
    if (toggles.diameter) base.diameter = exact_diameter(g);
    if (toggles.clustering) base.clustering = avg_local_clustering(g, scorer_options.workers);
    if (toggles.centralities) {
        base.degree = degree_centrality(g);
        base.betweenness = approx_betweenness(g, config.betweenness_samples, config.seed);
        base.pagerank_vec = pagerank(g);
    }
    if (toggles.community)
        base.conductance = guarded([&] { return avg_conductance(g, base.reference); });

    std::vector<AnalysisRecord> records;
    records.reserve(config.methods.size() * config.ratios.size());
    for (const MethodSpec& method : config.methods) {
        const auto t0 = std::chrono::steady_clock::now();
        EdgeScore score = compute_edge_score(g, method.base, scorer_options);
        if (method.local) score = localize(g, score, scorer_options.workers);
        const std::chrono::duration<double> seconds = std::chrono::steady_clock::now() - t0;

        for (double ratio : config.ratios) {
            const SparsificationResult sparse = filter_by_ratio(g, score, ratio, config.seed);
            const Graph& s = sparse.subgraph;

            AnalysisRecord rec;
            rec.method = method.base;
            rec.local = method.local;
            rec.ratio = ratio;
            rec.kept_edges = s.num_edges();
            rec.scoring_seconds = seconds.count();

            rec.largest_component_ratio =
                toggles.components
                    ? static_cast<double>(largest_component_size(s)) / base.lcc_size
                    : kNaN;
            rec.diameter_quotient =
                toggles.diameter
                    ? guarded([&] { return base.diameter / static_cast<double>(exact_diameter(s)); })
                    : kNaN;
            rec.clustering_deviation =
                toggles.clustering
                    ? avg_local_clustering(s, scorer_options.workers) - base.clustering
                    : kNaN;
            if (toggles.centralities) {
                rec.spearman_degree =
                    guarded([&] { return spearman_rho(degree_centrality(s), base.degree); });
                rec.spearman_betweenness = guarded([&] {
                    return spearman_rho(
                        approx_betweenness(s, config.betweenness_samples, config.seed),
                        base.betweenness);
                });
                rec.spearman_pagerank =
                    guarded([&] { return spearman_rho(pagerank(s), base.pagerank_vec); });
            } else {
                rec.spearman_degree = rec.spearman_betweenness = rec.spearman_pagerank = kNaN;
            }
            if (toggles.community) {
                rec.conductance = guarded([&] { return avg_conductance(s, base.reference); });
                rec.conductance_change =
                    std::isnan(base.conductance) || base.conductance == 0.0
                        ? kNaN
                        : (rec.conductance - base.conductance) / base.conductance;
                rec.fragmentation =
                    guarded([&] { return avg_fragmentation(s, base.reference); });
                rec.ari = guarded(
                    [&] { return adjusted_rand(base.reference, louvain(s, config.seed)); });
            } else {
                rec.conductance = rec.conductance_change = rec.fragmentation = rec.ari = kNaN;
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

}  // namespace backbone
