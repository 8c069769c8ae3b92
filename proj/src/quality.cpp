#include "modq/quality.hpp"

#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

#include "modq/errors.hpp"

namespace modq {
namespace {

void require_edges(const Graph& g) {
    if (g.edge_count() == 0) {
        fail(ErrorKind::UndefinedQuality, "quality is undefined for a graph without edges");
    }
}

ClusterStats stats_serial(const Graph& g, const Clustering& c) {
    ClusterStats s;
    s.m = static_cast<std::int64_t>(g.edge_count());
    s.degree_sums.assign(c.cluster_count(), 0);
    s.internal_edges.assign(c.cluster_count(), 0);
    auto labels = c.labels();
    for (NodeId v = 1; v <= g.node_count(); ++v) {
        s.degree_sums[labels[v - 1] - 1] += static_cast<std::int64_t>(g.degree(v));
    }
    for (const Edge& e : g.edges()) {
        if (labels[e.u - 1] == labels[e.v - 1]) ++s.internal_edges[labels[e.u - 1] - 1];
    }
    for (std::int64_t k : s.internal_edges) s.intra_edges += k;
    return s;
}

ClusterStats stats_parallel(const Graph& g, const Clustering& c) {
    ClusterStats s;
    s.m = static_cast<std::int64_t>(g.edge_count());
    const std::size_t K = c.cluster_count();
    s.degree_sums.assign(K, 0);
    s.internal_edges.assign(K, 0);
    auto labels = c.labels();
    auto edges = g.edges();
    const auto n = static_cast<std::int64_t>(g.node_count());
    const auto m = static_cast<std::int64_t>(edges.size());

#pragma omp parallel
    {
        std::vector<std::int64_t> deg(K, 0);
        std::vector<std::int64_t> internal(K, 0);
#pragma omp for nowait schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            deg[labels[i] - 1] += static_cast<std::int64_t>(g.degree(static_cast<NodeId>(i + 1)));
        }
#pragma omp for nowait schedule(static)
        for (std::int64_t i = 0; i < m; ++i) {
            const Edge& e = edges[static_cast<std::size_t>(i)];
            if (labels[e.u - 1] == labels[e.v - 1]) ++internal[labels[e.u - 1] - 1];
        }
#pragma omp critical(modq_cluster_stats_merge)
        for (std::size_t k = 0; k < K; ++k) {
            s.degree_sums[k] += deg[k];
            s.internal_edges[k] += internal[k];
        }
    }
    for (std::int64_t k : s.internal_edges) s.intra_edges += k;
    return s;
}

}  // namespace

std::int64_t ClusterStats::sum_squared_degrees() const {
    std::int64_t total = 0;
    for (std::int64_t d : degree_sums) total += d * d;
    return total;
}

ClusterStats cluster_stats(const Graph& g, const Clustering& c, Execution exec) {
    require_compatible(g, c);
    return exec == Execution::Serial ? stats_serial(g, c) : stats_parallel(g, c);
}

std::vector<std::int64_t> intracluster_edge_counts(const Graph& g, const Clustering& c) {
    return cluster_stats(g, c).internal_edges;
}

QualityReport evaluate(const Graph& g, const Clustering& c) {
    require_compatible(g, c);
    require_edges(g);
    ClusterStats s = cluster_stats(g, c);
    QualityReport r;
    r.m = s.m;
    r.K = c.cluster_count();
    r.exact_q_f = ratio(s.intra_edges, s.m);
    r.exact_q_0 = ratio(s.sum_squared_degrees(), 4 * s.m * s.m);
    r.exact_q_n = r.exact_q_f - r.exact_q_0;
    r.q_f = to_double(r.exact_q_f);
    r.q_0 = to_double(r.exact_q_0);
    r.q_n = to_double(r.exact_q_n);
    return r;
}

double q_f(const Graph& g, const Clustering& c) { return evaluate(g, c).q_f; }
double q_0(const Graph& g, const Clustering& c) { return evaluate(g, c).q_0; }
double q_newman(const Graph& g, const Clustering& c) { return evaluate(g, c).q_n; }

double q_gamma(const Graph& g, const Clustering& c, double gamma) {
    if (!(gamma >= 0) || !std::isfinite(gamma)) {
        fail(ErrorKind::MalformedInput, fmt::format("gamma must be a finite non-negative number, got {}", gamma));
    }
    QualityReport r = evaluate(g, c);
    return r.q_f - gamma * r.q_0;
}

double q_newman_double_sum(const Graph& g, const Clustering& c) {
    require_compatible(g, c);
    require_edges(g);
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    const NodeId n = g.node_count();
    auto labels = c.labels();
    double total = 0.0;
    for (NodeId i = 1; i <= n; ++i) {
        const double di = static_cast<double>(g.degree(i));
        for (NodeId j = 1; j <= n; ++j) {
            if (labels[i - 1] != labels[j - 1]) continue;
            const double a = g.adjacent(i, j) ? 1.0 : 0.0;
            total += a - di * static_cast<double>(g.degree(j)) / two_m;
        }
    }
    return total / two_m;
}

Rational relaxed_q0_minimum(std::int64_t K) {
    if (K < 1) fail(ErrorKind::MalformedInput, fmt::format("cluster count must be >= 1, got {}", K));
    return ratio(1, K);
}

PairCounts pair_counts(const Clustering& c1, const Clustering& c2) {
    if (c1.node_count() != c2.node_count()) {
        fail(ErrorKind::IncompatibleClustering,
             fmt::format("clusterings cover {} and {} nodes", c1.node_count(), c2.node_count()));
    }
    auto choose2 = [](std::uint64_t k) { return k * (k - 1) / 2; };
    std::unordered_map<std::uint64_t, std::uint64_t> joint;
    auto l1 = c1.labels();
    auto l2 = c2.labels();
    for (std::size_t i = 0; i < l1.size(); ++i) {
        ++joint[(static_cast<std::uint64_t>(l1[i]) << 32) | l2[i]];
    }
    std::uint64_t together_both = 0;
    for (const auto& [key, count] : joint) together_both += choose2(count);
    std::uint64_t together_first = 0;
    for (std::size_t s : c1.cluster_sizes()) together_first += choose2(s);
    std::uint64_t together_second = 0;
    for (std::size_t s : c2.cluster_sizes()) together_second += choose2(s);
    return {together_both, together_first - together_both, together_second - together_both};
}

Rational jaccard_exact(const Clustering& c1, const Clustering& c2, PairConvention convention) {
    PairCounts p = pair_counts(c1, c2);
    BigInt num = p.a11;
    BigInt den = BigInt(p.a11) + p.a10 + p.a01;
    if (convention == PairConvention::OrderedWithSelf) {
        num = 2 * num + c1.node_count();
        den = 2 * den + c1.node_count();
    }
    if (den == 0) {
        fail(ErrorKind::UndefinedSimilarity,
             "Jaccard index is undefined: no node pair is co-clustered in either clustering");
    }
    return Rational(num, den);
}

double jaccard(const Clustering& c1, const Clustering& c2, PairConvention convention) {
    return to_double(jaccard_exact(c1, c2, convention));
}

QualityFunction QualityFunction::parse(std::string_view name, double gamma) {
    if (name == "qn") return {Objective::Newman, 1.0};
    if (name == "qf") return {Objective::IntraFraction, 1.0};
    if (name == "q0") return {Objective::NullModel, 1.0};
    if (name == "qgamma") {
        if (!(gamma >= 0) || !std::isfinite(gamma)) {
            fail(ErrorKind::MalformedInput, fmt::format("gamma must be a finite non-negative number, got {}", gamma));
        }
        return {Objective::Gamma, gamma};
    }
    fail(ErrorKind::MalformedInput, fmt::format("unknown quality '{}' (expected qn, qf, q0 or qgamma)", name));
}

std::string_view QualityFunction::name() const {
    switch (objective) {
        case Objective::Newman: return "qn";
        case Objective::IntraFraction: return "qf";
        case Objective::NullModel: return "q0";
        case Objective::Gamma: return "qgamma";
    }
    return "?";
}

double QualityFunction::alpha() const { return objective == Objective::NullModel ? 0.0 : 1.0; }

double QualityFunction::beta() const {
    switch (objective) {
        case Objective::Newman: return -1.0;
        case Objective::IntraFraction: return 0.0;
        case Objective::NullModel: return 1.0;
        case Objective::Gamma: return -gamma;
    }
    return 0.0;
}

double QualityFunction::score(std::int64_t intra_edges, std::int64_t sum_squared_degrees,
                              std::int64_t m) const {
    const std::int64_t four_m = 4 * m;
    const double den = static_cast<double>(four_m) * static_cast<double>(m);
    switch (objective) {
        case Objective::Newman:
            return static_cast<double>(four_m * intra_edges - sum_squared_degrees) / den;
        case Objective::IntraFraction:
            return static_cast<double>(intra_edges) / static_cast<double>(m);
        case Objective::NullModel:
            return static_cast<double>(sum_squared_degrees) / den;
        case Objective::Gamma:
            return (static_cast<double>(four_m * intra_edges) -
                    gamma * static_cast<double>(sum_squared_degrees)) / den;
    }
    return 0.0;
}

double QualityFunction::operator()(const Graph& g, const Clustering& c) const {
    require_compatible(g, c);
    require_edges(g);
    ClusterStats s = cluster_stats(g, c);
    return score(s.intra_edges, s.sum_squared_degrees(), s.m);
}

}  // namespace modq
