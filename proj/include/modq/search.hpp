#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "modq/clustering.hpp"
#include "modq/execution.hpp"
#include "modq/graph.hpp"
#include "modq/quality.hpp"
#include "modq/rational.hpp"

namespace modq {

enum class SearchMethod { Exhaustive, ExhaustiveFixedK, Greedy };

std::string_view to_string(SearchMethod method);

/// Exhaustive search refuses graphs with more nodes than this (B_14 is about
/// 1.9e8 partitions).
inline constexpr NodeId kExhaustiveNodeLimit = 14;

struct SearchResult {
    Clustering best_clustering = Clustering::single_cluster(1);
    double best_score = 0;
    std::uint64_t evaluations = 0;
    SearchMethod method = SearchMethod::Exhaustive;
    /// Greedy only: score after each step, starting from the singletons.
    std::vector<double> score_trace;
};

/// Scores every partition of 1..n (restricted growth strings). Ties go to the
/// fewest clusters, then the lexicographically smallest growth string, so the
/// parallel and serial runs return the same clustering.
SearchResult brute_force_max(const Graph& g, const QualityFunction& quality,
                             Execution exec = Execution::Parallel);

/// As brute_force_max, restricted to partitions with exactly K clusters.
SearchResult brute_force_max_fixed_k(const Graph& g, const QualityFunction& quality, ClusterId K,
                                     Execution exec = Execution::Parallel);

/// Largest intracluster edge fraction over clusterings of exactly K clusters.
Rational f_g_k(const Graph& g, ClusterId K, Execution exec = Execution::Parallel);

/// Agglomerative merging from singletons. Each step merges the pair with the
/// largest strictly positive gain (ties within 1e-12 go to the smallest label
/// pair); stops when no merge improves the score.
SearchResult greedy_agglomerative(const Graph& g, const QualityFunction& quality);

}  // namespace modq
