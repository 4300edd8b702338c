#include "backbone/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/rng.hpp"

namespace backbone {

namespace {

// Visits each index of [0, count) independently with probability p, in
// ascending order, via geometric gaps. Cost is proportional to the number
// of hits.
template <typename Visit>
void sample_bernoulli_indices(std::uint64_t count, double p, Rng& rng, Visit&& visit) {
    if (count == 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::uint64_t i = 0; i < count; ++i) visit(i);
        return;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_q = std::log1p(-p);
    double idx = -1.0;
    while (true) {
        const double u = 1.0 - unit(rng);  // (0, 1]
        idx += 1.0 + std::floor(std::log(u) / log_q);
        if (idx >= static_cast<double>(count)) return;
        visit(static_cast<std::uint64_t>(idx));
    }
}

// Inverse of the row-major upper-triangle enumeration (i < j < c):
// offset(i) = i*c - i*(i+1)/2.
std::pair<std::uint32_t, std::uint32_t> decode_pair(std::uint64_t idx, std::uint32_t c) {
    const double cd = c;
    double i_guess = std::floor((2.0 * cd - 1.0 -
                                 std::sqrt((2.0 * cd - 1.0) * (2.0 * cd - 1.0) -
                                           8.0 * static_cast<double>(idx))) /
                                2.0);
    auto offset = [&](std::uint64_t i) { return i * c - i * (i + 1) / 2; };
    std::uint64_t i = static_cast<std::uint64_t>(std::max(0.0, i_guess));
    while (i + 1 < c && offset(i + 1) <= idx) ++i;
    while (i > 0 && offset(i) > idx) --i;
    const std::uint64_t j = i + 1 + (idx - offset(i));
    return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
}

}  // namespace

GeneratedGraph generate_planted_partition(const PlantedPartitionSpec& spec) {
    if (spec.communities < 1 || spec.nodes_per_community < 1)
        throw InvalidParameterError("need at least one community and one node per community");
    if (!(spec.p_in >= 0.0 && spec.p_in <= 1.0) || !(spec.p_out >= 0.0 && spec.p_out <= 1.0))
        throw InvalidParameterError("probabilities must lie in [0, 1]");
    if (!(spec.p_in > spec.p_out))
        throw InvalidParameterError("p_in must exceed p_out");

    const std::uint64_t k = spec.communities;
    const std::uint64_t c = spec.nodes_per_community;
    if (k > 0xfffffffeull / c) throw InvalidParameterError("graph too large");
    const std::uint64_t n64 = k * c;
    const NodeId n = static_cast<NodeId>(n64);

    Rng rng(spec.seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    const double expected = (c - 1.0) * spec.p_in + (n64 - c) * spec.p_out;
    edges.reserve(static_cast<std::size_t>(0.5 * expected * n64 * 1.05) + 16);

    // Intra-community pairs, block by block.
    const std::uint64_t intra_pairs = c * (c - 1) / 2;
    for (std::uint64_t b = 0; b < k; ++b) {
        const NodeId base = static_cast<NodeId>(b * c);
        sample_bernoulli_indices(intra_pairs, spec.p_in, rng, [&](std::uint64_t idx) {
            const auto [i, j] = decode_pair(idx, static_cast<std::uint32_t>(c));
            edges.emplace_back(base + i, base + j);
        });
    }
    // Inter-community pairs, block pair by block pair over the c*c grid.
    for (std::uint64_t a = 0; a < k; ++a) {
        for (std::uint64_t b = a + 1; b < k; ++b) {
            const NodeId base_a = static_cast<NodeId>(a * c);
            const NodeId base_b = static_cast<NodeId>(b * c);
            sample_bernoulli_indices(c * c, spec.p_out, rng, [&](std::uint64_t idx) {
                edges.emplace_back(static_cast<NodeId>(base_a + idx / c),
                                   static_cast<NodeId>(base_b + idx % c));
            });
        }
    }

    GeneratedGraph out;
    out.graph = Graph::from_edges(n, edges);
    std::vector<std::uint32_t> assignment(n);
    for (NodeId v = 0; v < n; ++v) assignment[v] = static_cast<std::uint32_t>(v / c);
    out.ground_truth = Partition(assignment);
    out.low_degree_warning = expected < 1.0;
    return out;
}

}  // namespace backbone
