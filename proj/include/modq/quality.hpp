#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "modq/clustering.hpp"
#include "modq/execution.hpp"
#include "modq/graph.hpp"
#include "modq/rational.hpp"

namespace modq {

/// Integer sufficient statistics of a (graph, clustering) pair. Every quality
/// function here is a ratio of these counts.
struct ClusterStats {
    std::int64_t m = 0;
    std::int64_t intra_edges = 0;             // sum_k |E_k|
    std::vector<std::int64_t> degree_sums;    // deg(V_k), index k-1
    std::vector<std::int64_t> internal_edges; // |E_k|, index k-1

    std::int64_t extra_edges() const { return m - intra_edges; }
    std::int64_t sum_squared_degrees() const;
};

ClusterStats cluster_stats(const Graph& g, const Clustering& c,
                           Execution exec = Execution::Parallel);

/// |E_k| for k = 1..K.
std::vector<std::int64_t> intracluster_edge_counts(const Graph& g, const Clustering& c);

struct QualityReport {
    double q_f = 0;
    double q_0 = 0;
    double q_n = 0;
    std::int64_t m = 0;
    ClusterId K = 0;
    Rational exact_q_f;
    Rational exact_q_0;
    Rational exact_q_n;
};

/// Throws UndefinedQuality when m == 0 and IncompatibleClustering when the
/// node counts differ.
QualityReport evaluate(const Graph& g, const Clustering& c);

double q_f(const Graph& g, const Clustering& c);
double q_0(const Graph& g, const Clustering& c);
double q_newman(const Graph& g, const Clustering& c);
double q_gamma(const Graph& g, const Clustering& c, double gamma);

/// Reference evaluation of modularity as the double sum over ordered node
/// pairs (i, j), i == j included, of (A_ij - deg(i)deg(j)/2m) [c_i == c_j] / 2m.
/// O(n^2); used to cross-check the decomposed form.
double q_newman_double_sum(const Graph& g, const Clustering& c);

/// Minimum of sum p_k^2 over the probability simplex with K components: 1/K.
Rational relaxed_q0_minimum(std::int64_t K);

// --- partition similarity ----------------------------------------------------

/// Co-membership counts over unordered pairs {u, v}, u != v.
struct PairCounts {
    std::uint64_t a11 = 0;  // together in both
    std::uint64_t a10 = 0;  // together in the first only
    std::uint64_t a01 = 0;  // together in the second only

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// O(n) via the contingency table of label pairs.
PairCounts pair_counts(const Clustering& c1, const Clustering& c2);

/// How node pairs are counted in the Jaccard index.
enum class PairConvention {
    /// Unordered pairs of distinct nodes: a11 / (a10 + a01 + a11).
    DistinctUnordered,
    /// Ordered pairs (u, v) with u == v allowed; equals
    /// sum n_ij^2 / (sum a_i^2 + sum b_j^2 - sum n_ij^2) over contingency
    /// counts. This is the convention behind the published table values.
    OrderedWithSelf,
};

/// Throws UndefinedSimilarity when the denominator is zero.
Rational jaccard_exact(const Clustering& c1, const Clustering& c2,
                       PairConvention convention = PairConvention::DistinctUnordered);
double jaccard(const Clustering& c1, const Clustering& c2,
               PairConvention convention = PairConvention::DistinctUnordered);

// --- objective selector used by the search module ---------------------------

enum class Objective { Newman, IntraFraction, NullModel, Gamma };

/// A quality function of the form alpha * Q_f + beta * Q_0.
struct QualityFunction {
    Objective objective = Objective::Newman;
    double gamma = 1.0;

    static QualityFunction parse(std::string_view name, double gamma = 1.0);
    std::string_view name() const;

    double alpha() const;
    double beta() const;

    /// Score from sufficient statistics; exact integer arithmetic for the
    /// non-gamma objectives, so equal counts always give identical doubles.
    double score(std::int64_t intra_edges, std::int64_t sum_squared_degrees, std::int64_t m) const;
    double operator()(const Graph& g, const Clustering& c) const;
};

}  // namespace modq
