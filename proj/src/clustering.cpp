#include "modq/clustering.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

#include "modq/errors.hpp"

namespace modq {

std::vector<ClusterId> canonical_labels(std::span<const std::int64_t> labels) {
    std::unordered_map<std::int64_t, ClusterId> remap;
    std::vector<ClusterId> out;
    out.reserve(labels.size());
    for (std::int64_t l : labels) {
        auto [it, inserted] = remap.try_emplace(l, static_cast<ClusterId>(remap.size() + 1));
        out.push_back(it->second);
    }
    return out;
}

Clustering::Clustering(std::vector<ClusterId> labels) : labels_(std::move(labels)) {
    cluster_count_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

Clustering Clustering::from_labels(std::span<const std::int64_t> labels) {
    if (labels.empty()) fail(ErrorKind::MalformedInput, "clustering must cover at least one node");
    return Clustering(canonical_labels(labels));
}

Clustering Clustering::from_blocks(NodeId n, std::span<const std::vector<NodeId>> blocks) {
    if (n == 0) fail(ErrorKind::MalformedInput, "clustering must cover at least one node");
    std::vector<std::int64_t> raw(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (NodeId v : blocks[b]) {
            if (v < 1 || v > n) {
                fail(ErrorKind::MalformedInput, fmt::format("node {} outside 1..{}", v, n));
            }
            if (raw[v - 1] != -1) {
                fail(ErrorKind::MalformedInput, fmt::format("node {} assigned to two clusters", v));
            }
            raw[v - 1] = static_cast<std::int64_t>(b);
        }
    }
    auto missing = std::find(raw.begin(), raw.end(), -1);
    if (missing != raw.end()) {
        fail(ErrorKind::MalformedInput,
             fmt::format("node {} not assigned to any cluster", missing - raw.begin() + 1));
    }
    return from_labels(raw);
}

Clustering Clustering::single_cluster(NodeId n) {
    if (n == 0) fail(ErrorKind::MalformedInput, "clustering must cover at least one node");
    return Clustering(std::vector<ClusterId>(n, 1));
}

Clustering Clustering::singletons(NodeId n) {
    if (n == 0) fail(ErrorKind::MalformedInput, "clustering must cover at least one node");
    std::vector<ClusterId> labels(n);
    for (NodeId i = 0; i < n; ++i) labels[i] = i + 1;
    return Clustering(std::move(labels));
}

ClusterId Clustering::label(NodeId v) const {
    if (v < 1 || v > labels_.size()) {
        fail(ErrorKind::MalformedInput, fmt::format("node {} outside 1..{}", v, labels_.size()));
    }
    return labels_[v - 1];
}

std::vector<std::vector<NodeId>> Clustering::members() const {
    std::vector<std::vector<NodeId>> out(cluster_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        out[labels_[i] - 1].push_back(static_cast<NodeId>(i + 1));
    }
    return out;
}

std::vector<std::size_t> Clustering::cluster_sizes() const {
    std::vector<std::size_t> out(cluster_count_, 0);
    for (ClusterId l : labels_) ++out[l - 1];
    return out;
}

void require_compatible(const Graph& g, const Clustering& c) {
    if (g.node_count() != c.node_count()) {
        fail(ErrorKind::IncompatibleClustering,
             fmt::format("clustering covers {} nodes but graph has {}", c.node_count(),
                         g.node_count()));
    }
}

}  // namespace modq
