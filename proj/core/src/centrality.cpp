#include "backbone/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/rng.hpp"

namespace backbone {

std::vector<double> degree_centrality(const Graph& g) {
    std::vector<double> d(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) d[v] = g.degree(v);
    return d;
}

std::vector<double> pagerank(const Graph& g, double damping, double tol) {
    if (!(damping >= 0.0 && damping < 1.0))
        throw InvalidParameterError("damping must lie in [0, 1)");
    if (!(tol > 0.0)) throw InvalidParameterError("tolerance must be positive");
    const NodeId n = g.num_nodes();
    if (n == 0) return {};

    std::vector<double> x(n, 1.0 / n), next(n);
    const double teleport = (1.0 - damping) / n;
    for (int iter = 0; iter < 100000; ++iter) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v)
            if (g.degree(v) == 0) dangling += x[v];
        const double base = teleport + damping * dangling / n;
        for (NodeId v = 0; v < n; ++v) {
            double in = 0.0;
            for (NodeId w : g.neighbors(v)) in += x[w] / g.degree(w);
            next[v] = base + damping * in;
        }
        double err = 0.0;
        for (NodeId v = 0; v < n; ++v) err += std::abs(next[v] - x[v]);
        x.swap(next);
        if (err < tol) break;
    }
    return x;
}

namespace {

// Single-source shortest paths with dependency accumulation (unweighted).
void accumulate_dependencies(const Graph& g, NodeId s, std::vector<double>& bc,
                             std::vector<std::uint32_t>& dist, std::vector<double>& sigma,
                             std::vector<double>& delta, std::vector<NodeId>& order) {
    constexpr std::uint32_t kInf = 0xffffffffu;
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] == kInf) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
        const NodeId w = order[i];
        for (NodeId v : g.neighbors(w))
            if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        if (w != s) bc[w] += delta[w];
    }
}

}  // namespace

std::vector<double> approx_betweenness(const Graph& g, std::uint32_t samples,
                                       std::uint64_t seed) {
    if (samples < 1) throw InvalidParameterError("need at least one pivot");
    const NodeId n = g.num_nodes();
    std::vector<double> bc(n, 0.0);
    if (n == 0) return bc;

    // Distinct pivots by partial Fisher-Yates; samples >= n degrades to the
    // exact computation over all sources.
    const NodeId pivots = static_cast<NodeId>(std::min<std::uint64_t>(samples, n));
    std::vector<NodeId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Rng rng(seed);
    for (NodeId i = 0; i < pivots; ++i) {
        std::uniform_int_distribution<NodeId> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }

    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (NodeId i = 0; i < pivots; ++i)
        accumulate_dependencies(g, pool[i], bc, dist, sigma, delta, order);

    const double scale = static_cast<double>(n) / static_cast<double>(pivots);
    for (auto& v : bc) v *= scale;
    return bc;
}

namespace {

std::vector<double> midranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = mid;
        i = j + 1;
    }
    return rank;
}

}  // namespace

double spearman_rho(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw InvalidParameterError("spearman needs two equally long vectors, length >= 2");
    const auto ra = midranks(a);
    const auto rb = midranks(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        throw UndefinedMeasureError("spearman undefined for constant ranking");
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace backbone
