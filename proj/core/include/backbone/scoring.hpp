#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "backbone/edge_score.hpp"
#include "backbone/graph.hpp"
#include "backbone/quadrangles.hpp"
#include "backbone/triangles.hpp"

namespace backbone {

/// Uniform random score per edge, tag "re".
EdgeScore score_random_edge(const Graph& g, std::uint64_t seed);

/// Raw triangle counts as scores, tag "tri".
EdgeScore score_triangles(const Graph& g, const TriangleCounts& tc);

/// Jaccard similarity of the endpoint neighborhoods, tag "js".
EdgeScore score_jaccard(const Graph& g, const TriangleCounts& tc);

/// Quadrilateral embeddedness q(u,v) / sqrt(q(u) * q(v)), tag "qls".
EdgeScore score_quadrilateral_embeddedness(const Graph& g, const QuadrangleCounts& qc);

/// Simmelian backbone strength: maximum prefix-Jaccard overlap of the
/// endpoint neighborhoods when each node ranks its neighbors by the given
/// per-edge source score (descending, ties share the best rank). Tag "ts"
/// when the source is triangle counts.
EdgeScore score_simmelian(const Graph& g, std::span<const double> ranking_source,
                          int workers = 0);
EdgeScore score_simmelian(const Graph& g, const TriangleCounts& tc, int workers = 0);

struct ForestFireParams {
    double p = 0.7;                  // forward burning probability, in [0, 1)
    double target_burn_ratio = 5.0;  // stop once edges burnt >= ratio * m
    std::uint64_t seed = 1;
};

/// Edge burn frequencies from repeated forest fires, tag "eff".
/// workers == 1 runs a fully sequential, seed-deterministic simulation;
/// more workers run independent fires concurrently.
EdgeScore score_edge_forest_fire(const Graph& g, const ForestFireParams& params,
                                 int workers = 1);

/// Test vectors of the algebraic distance iteration: `systems` independent
/// coordinates per node after `iterations` half-Jacobi smoothing steps with
/// mixing weight omega.
struct AlgebraicCoordinates {
    std::vector<double> coords;  // systems * n, coords[s * n + v]
    int systems = 0;
    int iterations = 0;
    double omega = 0.5;
};

AlgebraicCoordinates compute_algebraic_coordinates(const Graph& g, int systems,
                                                   int iterations, std::uint64_t seed,
                                                   int workers = 0);

/// Inverted, normalized algebraic distance, tag "ad". 1 = closest pair.
EdgeScore score_algebraic_distance(const Graph& g, int systems, int iterations,
                                   std::uint64_t seed, int workers = 0);

/// Local degree score: from each endpoint, neighbors are ranked by their
/// degree (descending, ties share the best rank) and an edge at rank r seen
/// from a node of degree d contributes 1 - log(r)/log(d) (1 for r == 1).
/// The edge keeps the better of its two endpoint contributions. Tag "ld".
EdgeScore score_local_degree(const Graph& g, int workers = 0);

/// Parameters shared by the scoring dispatcher.
struct ScorerOptions {
    std::uint64_t seed = 1;
    int ad_systems = 20;
    int ad_iterations = 20;
    double eff_p = 0.7;
    double eff_target_burn_ratio = 5.0;
    int workers = 0;
};

/// A method tag: a base scorer, optionally wrapped by local filtering as
/// "local:<base>".
struct MethodSpec {
    std::string base;
    bool local = false;

    std::string tag() const { return local ? "local:" + base : base; }

    /// Parses e.g. "js" or "local:js". Throws InvalidParameterError on an
    /// unknown base. "mod" is accepted only with allow_mod (correlation use).
    static MethodSpec parse(const std::string& tag, bool allow_mod = false);
};

/// Runs the base scorer named by `base_tag` ("re", "tri", "js", "ts", "qls",
/// "eff", "ad", "ld"). Local filtering is applied separately via localize().
EdgeScore compute_edge_score(const Graph& g, const std::string& base_tag,
                             const ScorerOptions& options);

}  // namespace backbone
