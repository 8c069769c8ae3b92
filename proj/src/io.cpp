#include "modq/io.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include <fmt/format.h>

#include "modq/errors.hpp"

namespace modq {
namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

template <typename Int>
std::pair<Int, Int> parse_pair(const Line& line) {
    std::string_view rest = line.text;
    auto next_token = [&]() -> std::string_view {
        auto b = rest.find_first_not_of(" \t");
        if (b == std::string_view::npos) return {};
        rest.remove_prefix(b);
        auto e = rest.find_first_of(" \t");
        auto tok = rest.substr(0, e);
        rest = e == std::string_view::npos ? std::string_view{} : rest.substr(e);
        return tok;
    };
    auto parse = [&](std::string_view tok) {
        Int value{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            fail(ErrorKind::Format,
                 fmt::format("line {}: expected two non-negative integers, got '{}'", line.number,
                             line.text));
        }
        return value;
    };
    Int a = parse(next_token());
    Int b = parse(next_token());
    if (!next_token().empty()) {
        fail(ErrorKind::Format,
             fmt::format("line {}: trailing tokens in '{}'", line.number, line.text));
    }
    return {a, b};
}

}  // namespace

Graph read_edge_list(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) fail(ErrorKind::Format, "missing 'n m' header");
    auto [n, m] = parse_pair<std::uint64_t>(lines.front());
    if (n == 0 || n > std::numeric_limits<NodeId>::max()) {
        fail(ErrorKind::Format, fmt::format("line {}: node count {} out of range", lines.front().number, n));
    }

    std::vector<Edge> edges;
    edges.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [u, v] = parse_pair<std::uint64_t>(lines[i]);
        if (u < 1 || u > n || v < 1 || v > n) {
            fail(ErrorKind::MalformedEdge,
                 fmt::format("line {}: edge ({}, {}) has an endpoint outside 1..{}", lines[i].number,
                             u, v, n));
        }
        if (u == v) {
            fail(ErrorKind::LoopRejected, fmt::format("line {}: self-loop at node {}", lines[i].number, u));
        }
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
    if (edges.size() != m) {
        fail(ErrorKind::Format,
             fmt::format("header declares {} edges but {} edge lines follow", m, edges.size()));
    }
    return Graph::from_edges(static_cast<NodeId>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = fmt::format("{} {}\n", g.node_count(), g.edge_count());
    for (const Edge& e : g.edges()) out += fmt::format("{} {}\n", e.u, e.v);
    return out;
}

Clustering read_clustering(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) fail(ErrorKind::Format, "missing 'n K' header");
    auto [n, k] = parse_pair<std::uint64_t>(lines.front());
    if (n == 0 || n > std::numeric_limits<NodeId>::max()) {
        fail(ErrorKind::Format, fmt::format("line {}: node count {} out of range", lines.front().number, n));
    }
    if (lines.size() - 1 != n) {
        fail(ErrorKind::Format,
             fmt::format("header declares {} nodes but {} assignment lines follow", n,
                         lines.size() - 1));
    }

    std::vector<std::int64_t> labels(n, -1);
    std::unordered_set<std::int64_t> distinct;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [node, label] = parse_pair<std::uint64_t>(lines[i]);
        if (node < 1 || node > n) {
            fail(ErrorKind::Format,
                 fmt::format("line {}: node {} outside 1..{}", lines[i].number, node, n));
        }
        if (labels[node - 1] != -1) {
            fail(ErrorKind::Format, fmt::format("line {}: node {} assigned twice", lines[i].number, node));
        }
        if (label > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            fail(ErrorKind::Format, fmt::format("line {}: label {} too large", lines[i].number, label));
        }
        labels[node - 1] = static_cast<std::int64_t>(label);
        distinct.insert(static_cast<std::int64_t>(label));
    }
    if (distinct.size() != k) {
        fail(ErrorKind::Format,
             fmt::format("header declares {} clusters but body uses {} distinct labels", k,
                         distinct.size()));
    }
    return Clustering::from_labels(labels);
}

std::string write_clustering(const Clustering& c) {
    std::string out = fmt::format("{} {}\n", c.node_count(), c.cluster_count());
    auto labels = c.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) out += fmt::format("{} {}\n", i + 1, labels[i]);
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, fmt::format("cannot open '{}' for writing", path.string()));
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) fail(ErrorKind::Io, fmt::format("write to '{}' failed", path.string()));
}

}  // namespace modq
