#include <gtest/gtest.h>

#include <random>

#include "modq/errors.hpp"
#include "modq/families.hpp"
#include "modq/quality.hpp"
#include "modq/search.hpp"
#include "test_support.hpp"

namespace modq {
namespace {

Clustering triangle_split() {
    std::vector<std::vector<NodeId>> blocks{{1, 2, 3}, {4, 5, 6}};
    return Clustering::from_blocks(6, blocks);
}

Graph two_triangles() {
    std::vector<Edge> e{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}};
    return Graph::from_edges(6, e);
}

Graph path(NodeId n) {
    std::vector<Edge> e;
    for (NodeId v = 1; v < n; ++v) e.push_back({v, v + 1});
    return Graph::from_edges(n, e);
}

// Best exact score over all partitions, by an enumerator unrelated to the
// search code.
Rational oracle_best(const Graph& g, const std::function<Rational(const Clustering&)>& score,
                     std::optional<std::size_t> K = std::nullopt) {
    std::optional<Rational> best;
    testing::for_each_partition(g.node_count(), [&](const std::vector<std::int64_t>& labels) {
        Clustering c = Clustering::from_labels(labels);
        if (K && c.cluster_count() != *K) return;
        Rational s = score(c);
        if (!best || s > *best) best = s;
    });
    return *best;
}

// Exact modularity as the double sum over ordered node pairs.
Rational naive_qn(const Graph& g, const Clustering& c) {
    const auto m2 = static_cast<std::int64_t>(2 * g.edge_count());
    Rational total = 0;
    for (NodeId i = 1; i <= g.node_count(); ++i) {
        for (NodeId j = 1; j <= g.node_count(); ++j) {
            if (c.label(i) != c.label(j)) continue;
            const auto ki = static_cast<std::int64_t>(g.degree(i));
            const auto kj = static_cast<std::int64_t>(g.degree(j));
            total += Rational(g.adjacent(i, j) ? 1 : 0) - ratio(ki * kj, m2);
        }
    }
    return total / m2;
}

// Intracluster edge fraction computed edge by edge.
Rational naive_qf(const Graph& g, const Clustering& c) {
    std::int64_t inside = 0;
    for (const Edge& e : g.edges()) inside += c.label(e.u) == c.label(e.v);
    return ratio(inside, static_cast<std::int64_t>(g.edge_count()));
}

TEST(BruteForceTest, TwoTriangles) {
    Graph g = two_triangles();
    SearchResult r = brute_force_max(g, QualityFunction{});
    EXPECT_TRUE(testing::same_partition(r.best_clustering, triangle_split()));
    EXPECT_NEAR(r.best_score, 5.0 / 14.0, 1e-12);
    EXPECT_EQ(oracle_best(g, [&](const Clustering& c) { return naive_qn(g, c); }), ratio(5, 14));
}

TEST(BruteForceTest, IntraFractionPrefersOneCluster) {
    Graph g = two_triangles();
    SearchResult r = brute_force_max(g, QualityFunction::parse("qf"));
    EXPECT_EQ(r.best_clustering.cluster_count(), 1u);
    EXPECT_DOUBLE_EQ(r.best_score, 1.0);
}

TEST(BruteForceTest, SmallestG) {
    Graph g = gen_g({Family::G, 1, 3, 3});
    SearchResult r = brute_force_max(g, QualityFunction{});
    EXPECT_GE(r.best_score, 0.5 - 1e-12);
}

TEST(BruteForceTest, EvaluationCountsAreBellAndStirling) {
    auto bell = testing::bell_numbers(10);
    std::mt19937_64 rng(53);
    for (NodeId n = 1; n <= 10; ++n) {
        Graph g = testing::random_graph(rng, n, 0.4, n >= 2);
        if (g.edge_count() == 0) continue;
        EXPECT_EQ(brute_force_max(g, QualityFunction{}).evaluations, bell[n]) << "n=" << n;
        for (ClusterId K = 1; K <= n; K += 2) {
            EXPECT_EQ(brute_force_max_fixed_k(g, QualityFunction{}, K).evaluations, testing::stirling2(n, K))
                << "n=" << n << " K=" << K;
        }
    }
}

TEST(BruteForceTest, SerialAndParallelAgree) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 12; ++trial) {
        NodeId n = 5 + static_cast<NodeId>(rng() % 6);
        Graph g = testing::random_graph(rng, n, 0.35);
        for (const char* q : {"qn", "qf", "qgamma"}) {
            QualityFunction f = QualityFunction::parse(q, 0.7);
            SearchResult s = brute_force_max(g, f, Execution::Serial);
            SearchResult p = brute_force_max(g, f, Execution::Parallel);
            EXPECT_EQ(s.best_clustering, p.best_clustering);
            EXPECT_EQ(s.best_score, p.best_score);
            EXPECT_EQ(s.evaluations, p.evaluations);
        }
    }
}

TEST(BruteForceTest, MatchesOracle) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        NodeId n = 3 + static_cast<NodeId>(rng() % 6);
        Graph g = testing::random_graph(rng, n, 0.4);
        SearchResult r = brute_force_max(g, QualityFunction{});
        Rational best = oracle_best(g, [&](const Clustering& c) { return naive_qn(g, c); });
        EXPECT_NEAR(r.best_score, to_double(best), 1e-12);
        EXPECT_EQ(naive_qn(g, r.best_clustering), best);
    }
}

TEST(BruteForceTest, SizeGuard) {
    Graph g = path(kExhaustiveNodeLimit + 1);
    try {
        brute_force_max(g, QualityFunction{});
        FAIL() << "expected InstanceTooLarge";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InstanceTooLarge);
    }
    EXPECT_THROW(f_g_k(g, 2), Error);
}

TEST(FgkTest, SmallCases) {
    Graph p5 = path(5);
    EXPECT_EQ(f_g_k(p5, 1), Rational(1));
    EXPECT_EQ(f_g_k(p5, 5), Rational(0));
    EXPECT_EQ(f_g_k(p5, 2), ratio(3, 4));
    EXPECT_EQ(f_g_k(two_triangles(), 2), ratio(6, 7));
}

TEST(FgkTest, RandomGraphsAgainstOracle) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        NodeId n = 2 + static_cast<NodeId>(rng() % 7);
        Graph g = testing::random_graph(rng, n, 0.45);
        Rational prev = 2;
        for (ClusterId K = 1; K <= n; ++K) {
            Rational v = f_g_k(g, K);
            EXPECT_EQ(v, oracle_best(g, [&](const Clustering& c) { return naive_qf(g, c); }, K));
            EXPECT_LE(v, prev);
            prev = v;
        }
        EXPECT_EQ(f_g_k(g, 1), Rational(1));
        EXPECT_EQ(f_g_k(g, n), Rational(0));
    }
}

TEST(GreedyTest, TwoTriangles) {
    SearchResult r = greedy_agglomerative(two_triangles(), QualityFunction{});
    EXPECT_TRUE(testing::same_partition(r.best_clustering, triangle_split()));
    EXPECT_NEAR(r.best_score, 5.0 / 14.0, 1e-12);
}

TEST(GreedyTest, IntraFractionReachesOne) {
    Graph g = path(9);
    SearchResult r = greedy_agglomerative(g, QualityFunction::parse("qf"));
    EXPECT_DOUBLE_EQ(r.best_score, 1.0);
    EXPECT_EQ(r.best_clustering.cluster_count(), 1u);
}

TEST(GreedyTest, BoundedByExhaustiveAndMonotone) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        NodeId n = 4 + static_cast<NodeId>(rng() % 6);
        Graph g = testing::random_graph(rng, n, 0.35);
        SearchResult gr = greedy_agglomerative(g, QualityFunction{});
        SearchResult bf = brute_force_max(g, QualityFunction{});
        EXPECT_LE(gr.best_score, bf.best_score + 1e-12);
        EXPECT_NEAR(gr.best_score, q_newman(g, gr.best_clustering), 1e-12);
        ASSERT_FALSE(gr.score_trace.empty());
        for (std::size_t i = 1; i < gr.score_trace.size(); ++i) EXPECT_GT(gr.score_trace[i], gr.score_trace[i - 1]);
    }
}

TEST(GreedyTest, FamilyGInstance) {
    FamilyParams p{Family::G, 3, 3, 48};
    Graph g = generate(p);
    SearchResult r = greedy_agglomerative(g, QualityFunction{});
    EXPECT_GE(r.best_score, q_newman(g, natural_clustering(p)));
}

}  // namespace
}  // namespace modq
