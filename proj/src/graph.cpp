#include "modq/graph.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "modq/errors.hpp"

namespace modq {

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges) {
    if (n == 0) fail(ErrorKind::MalformedInput, "graph must have at least one node");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
            fail(ErrorKind::MalformedEdge,
                 fmt::format("edge ({}, {}) has an endpoint outside 1..{}", e.u, e.v, n));
        }
        if (e.u == e.v) fail(ErrorKind::LoopRejected, fmt::format("self-loop at node {}", e.u));
        g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.offsets_.assign(std::size_t{n} + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u];
        ++g.offsets_[e.v];
    }
    // offsets_[v] currently holds deg(v) for v in 1..n; shift to row starts
    // indexed by v-1.
    std::size_t running = 0;
    for (NodeId v = 1; v <= n; ++v) {
        std::size_t d = g.offsets_[v];
        g.offsets_[v - 1] = running;
        running += d;
    }
    g.offsets_[n] = running;

    g.adjacency_.resize(running);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adjacency_[cursor[e.u - 1]++] = e.v;
        g.adjacency_[cursor[e.v - 1]++] = e.u;
    }
    for (NodeId v = 0; v < n; ++v) {
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    return g;
}

std::size_t Graph::degree(NodeId v) const {
    if (v < 1 || v > n_) fail(ErrorKind::MalformedInput, fmt::format("node {} outside 1..{}", v, n_));
    return offsets_[v] - offsets_[v - 1];
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v < 1 || v > n_) fail(ErrorKind::MalformedInput, fmt::format("node {} outside 1..{}", v, n_));
    return {adjacency_.data() + offsets_[v - 1], offsets_[v] - offsets_[v - 1]};
}

bool Graph::adjacent(NodeId u, NodeId v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::size_t degree_sum(const Graph& g, std::span<const NodeId> nodes) {
    std::size_t total = 0;
    for (NodeId v : nodes) total += g.degree(v);
    return total;
}

}  // namespace modq
