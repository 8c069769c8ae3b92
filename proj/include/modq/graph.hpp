#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace modq {

/// Nodes are numbered 1..n.
using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edges are stored normalized (u < v)
/// and sorted; duplicates passed at construction are merged.
class Graph {
public:
    /// Throws MalformedInput for n == 0, MalformedEdge for an endpoint outside
    /// 1..n and LoopRejected for u == v.
    static Graph from_edges(NodeId n, std::span<const Edge> edges);

    NodeId node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::size_t degree(NodeId v) const;
    std::span<const NodeId> neighbors(NodeId v) const;

    /// Adjacency predicate A_uv.
    bool adjacent(NodeId u, NodeId v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph() = default;

    NodeId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;  // CSR row offsets, size n+1
    std::vector<NodeId> adjacency_;     // sorted per row
};

/// Sum of deg(v) over the given nodes. Throws MalformedInput for a node
/// outside 1..n.
std::size_t degree_sum(const Graph& g, std::span<const NodeId> nodes);

}  // namespace modq
