#include "modq/search.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "modq/errors.hpp"

namespace modq {
namespace {

// Growth strings are compared lexicographically; at the same length this is
// the enumeration order.
struct Candidate {
    double score = -std::numeric_limits<double>::infinity();
    ClusterId clusters = 0;
    std::vector<ClusterId> rgs;

    bool valid() const { return !rgs.empty(); }

    bool better_than(const Candidate& other) const {
        if (!other.valid()) return valid();
        if (score != other.score) return score > other.score;
        if (clusters != other.clusters) return clusters < other.clusters;
        return rgs < other.rgs;
    }
};

class Enumerator {
public:
    Enumerator(const Graph& g, const QualityFunction& quality, ClusterId fixed_k)
        : quality_(quality), n_(g.node_count()), m_(static_cast<std::int64_t>(g.edge_count())),
          fixed_k_(fixed_k), degree_(n_), earlier_(n_), rgs_(n_, 0), cluster_degree_(n_, 0) {
        for (NodeId v = 1; v <= n_; ++v) {
            degree_[v - 1] = static_cast<std::int64_t>(g.degree(v));
            for (NodeId w : g.neighbors(v)) {
                if (w < v) earlier_[v - 1].push_back(w - 1);
            }
        }
    }

    // Fixes the first prefix.size() nodes; false if the prefix cannot reach
    // a partition with fixed_k clusters.
    bool seed(std::span<const ClusterId> prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!assignable(i, prefix[i])) return false;
            assign(i, prefix[i]);
        }
        return true;
    }

    void run(std::size_t from) { descend(from); }

    const Candidate& best() const { return best_; }
    std::uint64_t evaluations() const { return evaluations_; }

private:
    bool assignable(std::size_t i, ClusterId c) const {
        const ClusterId used_after = std::max(used_, c + 1);
        if (fixed_k_ == 0) return true;
        return used_after <= fixed_k_ && used_after + (n_ - i - 1) >= fixed_k_;
    }

    void assign(std::size_t i, ClusterId c) {
        rgs_[i] = c;
        for (NodeId w : earlier_[i]) intra_ += rgs_[w] == c ? 1 : 0;
        const std::int64_t d = degree_[i];
        sum_sq_ += 2 * cluster_degree_[c] * d + d * d;
        cluster_degree_[c] += d;
        if (c == used_) ++used_;
    }

    void unassign(std::size_t i, ClusterId c, ClusterId used_before) {
        const std::int64_t d = degree_[i];
        cluster_degree_[c] -= d;
        sum_sq_ -= 2 * cluster_degree_[c] * d + d * d;
        for (NodeId w : earlier_[i]) intra_ -= rgs_[w] == c ? 1 : 0;
        used_ = used_before;
    }

    void descend(std::size_t i) {
        if (i == n_) {
            ++evaluations_;
            const double score = quality_.score(intra_, sum_sq_, m_);
            // Enumeration is lexicographic, so an equal-score, equal-size
            // candidate seen later never wins.
            if (!best_.valid() || score > best_.score ||
                (score == best_.score && used_ < best_.clusters)) {
                best_.score = score;
                best_.clusters = used_;
                best_.rgs = rgs_;
            }
            return;
        }
        const ClusterId used_before = used_;
        for (ClusterId c = 0; c <= used_before; ++c) {
            if (!assignable(i, c)) continue;
            assign(i, c);
            descend(i + 1);
            unassign(i, c, used_before);
        }
    }

    const QualityFunction& quality_;
    std::size_t n_;
    std::int64_t m_;
    ClusterId fixed_k_;
    std::vector<std::int64_t> degree_;
    std::vector<std::vector<NodeId>> earlier_;  // 0-based neighbors with a smaller index

    std::vector<ClusterId> rgs_;
    std::vector<std::int64_t> cluster_degree_;
    std::int64_t intra_ = 0;
    std::int64_t sum_sq_ = 0;
    ClusterId used_ = 0;

    Candidate best_;
    std::uint64_t evaluations_ = 0;
};

void all_prefixes(std::size_t length, std::vector<ClusterId>& current, ClusterId used,
                  std::vector<std::vector<ClusterId>>& out) {
    if (current.size() == length) {
        out.push_back(current);
        return;
    }
    for (ClusterId c = 0; c <= used; ++c) {
        current.push_back(c);
        all_prefixes(length, current, std::max(used, c + 1), out);
        current.pop_back();
    }
}

SearchResult exhaustive(const Graph& g, const QualityFunction& quality, ClusterId fixed_k,
                        Execution exec) {
    const NodeId n = g.node_count();
    if (n > kExhaustiveNodeLimit) {
        fail(ErrorKind::InstanceTooLarge,
             fmt::format("exhaustive search is limited to {} nodes, graph has {}", kExhaustiveNodeLimit, n));
    }
    if (g.edge_count() == 0) fail(ErrorKind::UndefinedQuality, "quality is undefined for a graph without edges");
    if (fixed_k > n) {
        fail(ErrorKind::MalformedInput, fmt::format("K must lie in 1..{}, got {}", n, fixed_k));
    }

    Candidate best;
    std::uint64_t evaluations = 0;

    // Small instances are not worth sharding.
    const std::size_t prefix_length = exec == Execution::Parallel && n >= 8 ? 6 : 0;
    if (prefix_length == 0) {
        Enumerator e(g, quality, fixed_k);
        e.run(0);
        best = e.best();
        evaluations = e.evaluations();
    } else {
        std::vector<std::vector<ClusterId>> prefixes;
        std::vector<ClusterId> scratch;
        all_prefixes(prefix_length, scratch, 0, prefixes);
        const auto tasks = static_cast<std::int64_t>(prefixes.size());

#pragma omp parallel
        {
            Candidate local;
            std::uint64_t local_evaluations = 0;
#pragma omp for schedule(dynamic, 1) nowait
            for (std::int64_t t = 0; t < tasks; ++t) {
                Enumerator e(g, quality, fixed_k);
                if (!e.seed(prefixes[static_cast<std::size_t>(t)])) continue;
                e.run(prefix_length);
                local_evaluations += e.evaluations();
                if (e.best().better_than(local)) local = e.best();
            }
#pragma omp critical(modq_exhaustive_reduce)
            {
                evaluations += local_evaluations;
                if (local.better_than(best)) best = std::move(local);
            }
        }
    }

    if (!best.valid()) fail(ErrorKind::MalformedInput, "no partition satisfies the cluster-count constraint");

    std::vector<std::int64_t> labels(best.rgs.begin(), best.rgs.end());
    SearchResult result;
    result.best_clustering = Clustering::from_labels(labels);
    result.best_score = quality(g, result.best_clustering);
    result.evaluations = evaluations;
    result.method = fixed_k == 0 ? SearchMethod::Exhaustive : SearchMethod::ExhaustiveFixedK;
    return result;
}

}  // namespace

std::string_view to_string(SearchMethod method) {
    switch (method) {
        case SearchMethod::Exhaustive: return "exhaustive";
        case SearchMethod::ExhaustiveFixedK: return "exhaustive-fixed-K";
        case SearchMethod::Greedy: return "greedy";
    }
    return "?";
}

SearchResult brute_force_max(const Graph& g, const QualityFunction& quality, Execution exec) {
    return exhaustive(g, quality, 0, exec);
}

SearchResult brute_force_max_fixed_k(const Graph& g, const QualityFunction& quality, ClusterId K,
                                     Execution exec) {
    if (K < 1) fail(ErrorKind::MalformedInput, "K must be >= 1");
    return exhaustive(g, quality, K, exec);
}

Rational f_g_k(const Graph& g, ClusterId K, Execution exec) {
    SearchResult r = brute_force_max_fixed_k(g, QualityFunction{Objective::IntraFraction}, K, exec);
    return evaluate(g, r.best_clustering).exact_q_f;
}

SearchResult greedy_agglomerative(const Graph& g, const QualityFunction& quality) {
    if (g.edge_count() == 0) fail(ErrorKind::UndefinedQuality, "quality is undefined for a graph without edges");

    const NodeId n = g.node_count();
    const auto m = static_cast<std::int64_t>(g.edge_count());
    const double alpha = quality.alpha();
    const double beta = quality.beta();
    const double four_m = 4.0 * static_cast<double>(m);
    const double tolerance = 1e-12 * four_m * static_cast<double>(m);

    // Cluster ids are 0-based node indices; a merged cluster keeps the
    // smaller id.
    std::vector<std::map<NodeId, std::int64_t>> links(n);
    std::vector<std::int64_t> degree(n);
    std::vector<std::vector<NodeId>> members(n);
    std::vector<bool> active(n, true);
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = static_cast<std::int64_t>(g.degree(v + 1));
        members[v] = {v};
    }
    for (const Edge& e : g.edges()) {
        links[e.u - 1][e.v - 1] += 1;
        links[e.v - 1][e.u - 1] += 1;
    }
    std::int64_t intra = 0;
    std::int64_t sum_sq = 0;
    for (std::int64_t d : degree) sum_sq += d * d;

    SearchResult result;
    result.method = SearchMethod::Greedy;
    result.score_trace.push_back(quality.score(intra, sum_sq, m));

    // Gains are compared as numerators over the common denominator 4m^2.
    auto gain = [&](NodeId a, NodeId b, std::int64_t between) {
        return alpha * four_m * static_cast<double>(between) +
               beta * 2.0 * static_cast<double>(degree[a]) * static_cast<double>(degree[b]);
    };

    while (true) {
        double best_gain = 0.0;
        NodeId best_a = 0;
        NodeId best_b = 0;
        bool found = false;
        auto consider = [&](NodeId a, NodeId b, std::int64_t between) {
            ++result.evaluations;
            const double delta = gain(a, b, between);
            if (delta > tolerance && (!found || delta > best_gain + tolerance)) {
                found = true;
                best_gain = delta;
                best_a = a;
                best_b = b;
            }
        };
        if (beta > 0) {
            for (NodeId a = 0; a < n; ++a) {
                if (!active[a]) continue;
                for (NodeId b = a + 1; b < n; ++b) {
                    if (!active[b]) continue;
                    auto it = links[a].find(b);
                    consider(a, b, it == links[a].end() ? 0 : it->second);
                }
            }
        } else {
            for (NodeId a = 0; a < n; ++a) {
                if (!active[a]) continue;
                for (auto it = links[a].upper_bound(a); it != links[a].end(); ++it) consider(a, it->first, it->second);
            }
        }
        if (!found) break;

        const NodeId a = best_a;
        const NodeId b = best_b;
        for (const auto& [c, w] : links[b]) {
            if (c == a) {
                intra += w;
                continue;
            }
            links[a][c] += w;
            links[c][a] += w;
            links[c].erase(b);
        }
        links[a].erase(b);
        links[b].clear();
        sum_sq += 2 * degree[a] * degree[b];
        degree[a] += degree[b];
        degree[b] = 0;
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        members[b].clear();
        active[b] = false;
        result.score_trace.push_back(quality.score(intra, sum_sq, m));
    }

    std::vector<std::int64_t> labels(n);
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId v : members[a]) labels[v] = a;
    }
    result.best_clustering = Clustering::from_labels(labels);
    result.best_score = quality(g, result.best_clustering);
    return result;
}

}  // namespace modq
