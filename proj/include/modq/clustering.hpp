#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modq/graph.hpp"

namespace modq {

using ClusterId = std::uint32_t;

/// Relabels so that clusters are numbered 1..K in order of first appearance.
/// Idempotent; preserves co-membership.
std::vector<ClusterId> canonical_labels(std::span<const std::int64_t> labels);

/// A partition of nodes 1..n, always held in canonical form: no empty
/// clusters and labels 1..K by first-node appearance.
class Clustering {
public:
    /// labels[i] is the cluster label of node i+1; any integer values.
    static Clustering from_labels(std::span<const std::int64_t> labels);

    /// Blocks may be empty (they are dropped); every node in 1..n must appear
    /// in exactly one block.
    static Clustering from_blocks(NodeId n, std::span<const std::vector<NodeId>> blocks);

    static Clustering single_cluster(NodeId n);
    static Clustering singletons(NodeId n);

    NodeId node_count() const noexcept { return static_cast<NodeId>(labels_.size()); }
    ClusterId cluster_count() const noexcept { return cluster_count_; }

    /// Cluster of node v (1-based), in 1..K.
    ClusterId label(NodeId v) const;

    /// Labels indexed by node-1.
    std::span<const ClusterId> labels() const noexcept { return labels_; }

    /// members()[k-1] lists the nodes of cluster k in increasing order.
    std::vector<std::vector<NodeId>> members() const;

    std::vector<std::size_t> cluster_sizes() const;

    friend bool operator==(const Clustering&, const Clustering&) = default;

private:
    explicit Clustering(std::vector<ClusterId> labels);

    std::vector<ClusterId> labels_;
    ClusterId cluster_count_ = 0;
};

/// Throws IncompatibleClustering when c does not partition g's node set.
void require_compatible(const Graph& g, const Clustering& c);

}  // namespace modq
