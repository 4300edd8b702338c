#include "backbone/filtering.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "backbone/errors.hpp"
#include "backbone/scoring.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace backbone;

namespace {

std::set<EdgeId> kept_ids(const SparsificationResult& result) {
    std::set<EdgeId> out;
    for (EdgeId e = 0; e < result.kept.size(); ++e)
        if (result.kept[e]) out.insert(e);
    return out;
}

}  // namespace

TEST(RankWithTies, CompetitionRanksShareTheBestPosition) {
    const std::vector<double> scores{5.0, 3.0, 5.0, 1.0};
    const std::vector<std::uint32_t> ranks = rank_with_ties(scores);
    EXPECT_EQ(ranks, (std::vector<std::uint32_t>{1, 3, 1, 4}));

    const std::vector<double> all_equal{2.0, 2.0, 2.0};
    EXPECT_EQ(rank_with_ties(all_equal), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(RankWithTies, MatchesCountingOracle) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coarse(0, 9);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> scores(57);
        for (double& s : scores) s = coarse(rng) * 0.5;
        EXPECT_EQ(rank_with_ties(scores), oracles::ranks_by_counting(scores));
    }
}

TEST(Localize, EveryEdgeRankedFirstSomewhereSurvives) {
    // Star with one extra edge between two leaves; raw score favors leaf 1.
    const Graph g = testsupport::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
    EdgeScore raw{std::vector<double>(g.num_edges(), 0.0), "tri"};
    raw.values[g.edge_id(0, 1)] = 4.0;
    raw.values[g.edge_id(0, 2)] = 3.0;
    raw.values[g.edge_id(0, 3)] = 2.0;
    raw.values[g.edge_id(0, 4)] = 1.0;
    raw.values[g.edge_id(1, 2)] = 0.5;

    const EdgeScore local = localize(g, raw);
    EXPECT_EQ(local.method, "local:tri");
    // Rank 1 from either endpoint gives score 1; even the hub's weakest edge
    // is its leaf's best.
    EXPECT_DOUBLE_EQ(local.values[g.edge_id(0, 1)], 1.0);
    EXPECT_DOUBLE_EQ(local.values[g.edge_id(0, 2)], 1.0);
    EXPECT_DOUBLE_EQ(local.values[g.edge_id(0, 3)], 1.0);
    EXPECT_DOUBLE_EQ(local.values[g.edge_id(0, 4)], 1.0);
    // 1-2 is rank 2 at both degree-2 endpoints: 1 - log(2)/log(2) = 0.
    EXPECT_DOUBLE_EQ(local.values[g.edge_id(1, 2)], 0.0);
}

TEST(Localize, ScoresFollowOneMinusLogRankOverLogDegree) {
    const Graph g = testsupport::star(8);
    EdgeScore raw{std::vector<double>(g.num_edges()), "tri"};
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        raw.values[e] = static_cast<double>(g.num_edges() - e);
    const EdgeScore local = localize(g, raw);
    // Leaf side always contributes rank 1 -> max is 1 for every edge.
    for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_DOUBLE_EQ(local.values[e], 1.0);

    // Two hubs joined by a bridge expose the hub-side formula.
    const Graph h = testsupport::from_pairs(
        9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}, {4, 8}});
    EdgeScore hraw{std::vector<double>(h.num_edges(), 0.0), "tri"};
    hraw.values[h.edge_id(0, 1)] = 9;
    hraw.values[h.edge_id(0, 2)] = 8;
    hraw.values[h.edge_id(0, 3)] = 7;
    hraw.values[h.edge_id(0, 4)] = 4.5;  // rank 4 of 4 at node 0, rank 3 of 5 at node 4
    hraw.values[h.edge_id(4, 5)] = 6;
    hraw.values[h.edge_id(4, 6)] = 5;
    hraw.values[h.edge_id(4, 7)] = 4;
    hraw.values[h.edge_id(4, 8)] = 3;
    const EdgeScore hl = localize(h, hraw);
    const double from_node0 = 1.0 - std::log(4.0) / std::log(4.0);
    const double from_node4 = 1.0 - std::log(3.0) / std::log(5.0);
    EXPECT_NEAR(hl.values[h.edge_id(0, 4)], std::max(from_node0, from_node4), 1e-12);
    EXPECT_DOUBLE_EQ(hl.values[h.edge_id(0, 1)], 1.0);
}

TEST(Localize, WorkerCountDoesNotChangeResults) {
    const Graph g = testsupport::gnp(300, 0.05, 13);
    const EdgeScore tri = compute_edge_score(g, "tri", {});
    const EdgeScore one = localize(g, tri, 1);
    for (int workers : {2, 4, 8}) EXPECT_EQ(localize(g, tri, workers).values, one.values);
}

TEST(FilterByRatio, KeepsExactlyRoundedShare) {
    const Graph g = testsupport::cycle(10);
    EdgeScore score{std::vector<double>(10), "tri"};
    for (EdgeId e = 0; e < 10; ++e) score.values[e] = static_cast<double>(e);
    EXPECT_EQ(filter_by_ratio(g, score, 0.3, 1).subgraph.num_edges(), 3u);
    // Half rounds up: 0.25 * 10 = 2.5 -> 3.
    EXPECT_EQ(filter_by_ratio(g, score, 0.25, 1).subgraph.num_edges(), 3u);
    EXPECT_EQ(filter_by_ratio(g, score, 0.0, 1).subgraph.num_edges(), 0u);
    EXPECT_EQ(filter_by_ratio(g, score, 1.0, 1).subgraph.num_edges(), 10u);
}

TEST(FilterByRatio, PrefersHigherScores) {
    const Graph g = testsupport::cycle(10);
    EdgeScore score{std::vector<double>(10, 0.0), "tri"};
    score.values[2] = score.values[5] = score.values[7] = 1.0;
    const auto result = filter_by_ratio(g, score, 0.3, 1);
    EXPECT_EQ(kept_ids(result), (std::set<EdgeId>{2, 5, 7}));
    EXPECT_EQ(result.subgraph.num_nodes(), g.num_nodes());
    EXPECT_EQ(result.subgraph.num_edges(), 3u);
    // edge_map sends kept originals to their new ids.
    EXPECT_EQ(result.edge_map[2], 0u);
    EXPECT_EQ(result.edge_map[5], 1u);
    EXPECT_EQ(result.edge_map[7], 2u);
    EXPECT_EQ(result.edge_map[0], kNoEdge);
}

TEST(FilterByRatio, BackbonesAreNestedAcrossRatios) {
    const Graph g = testsupport::gnp(150, 0.06, 23);
    const EdgeScore js = compute_edge_score(g, "js", {});
    std::set<EdgeId> previous;
    for (double ratio : {0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0}) {
        const auto result = filter_by_ratio(g, js, ratio, 7);
        const std::set<EdgeId> current = kept_ids(result);
        EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(),
                                  previous.end()))
            << "backbone at ratio " << ratio << " must contain all smaller backbones";
        previous = current;
    }
    EXPECT_EQ(previous.size(), g.num_edges());
}

TEST(FilterByRatio, TieBreakIsSeedDeterministic) {
    const Graph g = testsupport::gnp(100, 0.1, 3);
    const EdgeScore flat{std::vector<double>(g.num_edges(), 1.0), "re"};
    const auto a = filter_by_ratio(g, flat, 0.4, 42);
    const auto b = filter_by_ratio(g, flat, 0.4, 42);
    const auto c = filter_by_ratio(g, flat, 0.4, 43);
    EXPECT_EQ(a.kept, b.kept);
    EXPECT_NE(a.kept, c.kept);
}

TEST(FilterByRatio, IdentityAtRatioOne) {
    const Graph g = testsupport::gnp(60, 0.1, 17);
    const EdgeScore score = compute_edge_score(g, "tri", {});
    const auto result = filter_by_ratio(g, score, 1.0, 1);
    EXPECT_EQ(result.subgraph.edges(), g.edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_EQ(result.edge_map[e], e);
}

TEST(FilterByRatio, RejectsBadArguments) {
    const Graph g = testsupport::cycle(4);
    const EdgeScore score{std::vector<double>(4, 0.0), "tri"};
    EXPECT_THROW(filter_by_ratio(g, score, -0.1, 1), InvalidParameterError);
    EXPECT_THROW(filter_by_ratio(g, score, 1.1, 1), InvalidParameterError);
    const EdgeScore short_score{std::vector<double>(3, 0.0), "tri"};
    EXPECT_THROW(filter_by_ratio(g, short_score, 0.5, 1), InvalidParameterError);
}

TEST(MethodSpec, ParsesBaseAndLocalTags) {
    const MethodSpec plain = MethodSpec::parse("js");
    EXPECT_EQ(plain.base, "js");
    EXPECT_FALSE(plain.local);
    EXPECT_EQ(plain.tag(), "js");

    const MethodSpec wrapped = MethodSpec::parse("local:tri");
    EXPECT_EQ(wrapped.base, "tri");
    EXPECT_TRUE(wrapped.local);
    EXPECT_EQ(wrapped.tag(), "local:tri");

    EXPECT_THROW(MethodSpec::parse("nope"), InvalidParameterError);
    EXPECT_THROW(MethodSpec::parse("local:nope"), InvalidParameterError);
    EXPECT_THROW(MethodSpec::parse("local:"), InvalidParameterError);
    EXPECT_THROW(MethodSpec::parse(""), InvalidParameterError);
    // "mod" is a correlation pseudo-method, not a sweep scorer.
    EXPECT_THROW(MethodSpec::parse("mod"), InvalidParameterError);
    EXPECT_EQ(MethodSpec::parse("mod", true).base, "mod");
}
