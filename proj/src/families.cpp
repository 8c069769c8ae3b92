#include "modq/families.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "modq/errors.hpp"
#include "modq/quality.hpp"

namespace modq {
namespace {

constexpr std::int64_t kMaxNodes = std::int64_t{1} << 32;

NodeId node(std::int64_t v) { return static_cast<NodeId>(v); }

// Structural facts of H that its lemmas rely on. Violations are bugs.
void self_check_h(const FamilyParams& p, const Graph& g) {
    auto bad = [](const std::string& what) { throw std::logic_error("H generator self-check: " + what); };

    const std::int64_t n = p.node_count();
    const auto m = static_cast<std::int64_t>(g.edge_count());
    if (m != p.K * (2 * p.N1 + 2 * p.N2 - 5) + (p.K - 1)) bad("edge count");
    if (!(2 * p.K * (p.N1 + p.N2 - 4) < m && m < 2 * p.K * (p.N1 + p.N2 - 2))) bad("edge bounds");

    std::int64_t degree_two = 0;
    for (std::int64_t v = 1; v <= n; ++v) {
        auto d = g.degree(node(v));
        if (d == 2) {
            ++degree_two;
            if (v != 1 && v != n) bad(fmt::format("node {} has degree 2", v));
        } else if (d != 3 && d != 4) {
            bad(fmt::format("node {} has degree {}", v, d));
        }
    }
    if (degree_two != 2) bad("degree-2 node count");

    ClusterStats s = cluster_stats(g, natural_clustering(p), Execution::Serial);
    if (s.extra_edges() != 2 * p.K - 1) bad("extracluster edges under the natural clustering");
    // Clusters holding node 1 or node n lose one unit of degree; every other
    // cluster sits exactly on 4N-4.
    const std::size_t last = s.degree_sums.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        const std::int64_t size = k % 2 == 0 ? p.N1 : p.N2;
        const std::int64_t expected = (k == 0 || k == last) ? 4 * size - 5 : 4 * size - 4;
        if (s.degree_sums[k] != expected || !(4 * size - 8 < s.degree_sums[k])) {
            bad(fmt::format("deg(V_{}) = {}, expected {}", k + 1, s.degree_sums[k], expected));
        }
    }
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::G ? "G" : "H"; }

Family parse_family(std::string_view name) {
    if (name == "G" || name == "g") return Family::G;
    if (name == "H" || name == "h") return Family::H;
    fail(ErrorKind::FamilyParameter, fmt::format("unknown family '{}' (expected G or H)", name));
}

void FamilyParams::validate() const {
    const std::int64_t lo = min_block(family);
    if (K < 1) fail(ErrorKind::FamilyParameter, fmt::format("K must be >= 1, got {}", K));
    if (N1 < lo || N2 < lo) {
        fail(ErrorKind::FamilyParameter,
             fmt::format("family {} requires N1, N2 >= {}, got N1={}, N2={}", to_string(family), lo, N1, N2));
    }
    if (N1 > kMaxNodes || N2 > kMaxNodes || K > kMaxNodes / (N1 + N2)) {
        fail(ErrorKind::FamilyParameter, "instance does not fit 32-bit node ids");
    }
}

Graph gen_g(const FamilyParams& p) {
    if (p.family != Family::G) fail(ErrorKind::FamilyParameter, "gen_g requires family G");
    p.validate();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p.K * (p.N1 + p.N2 - 2)));
    for (std::int64_t c = 0; c < p.K; ++c) {
        const std::int64_t base = c * p.block_size();
        for (std::int64_t i = 1; i < p.N1; ++i) edges.push_back({node(base + i), node(base + i + 1)});
        for (std::int64_t i = p.N1 + 1; i < p.N1 + p.N2; ++i) {
            edges.push_back({node(base + i), node(base + i + 1)});
        }
    }
    return Graph::from_edges(node(p.node_count()), edges);
}

Graph gen_h(const FamilyParams& p) {
    if (p.family != Family::H) fail(ErrorKind::FamilyParameter, "gen_h requires family H");
    p.validate();
    const std::int64_t size = p.block_size();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p.K * (2 * size - 4)));
    for (std::int64_t c = 0; c < p.K; ++c) {
        const std::int64_t base = c * size;
        for (std::int64_t i = 1; i < size; ++i) edges.push_back({node(base + i), node(base + i + 1)});
        // chords never cross the N1/N2 boundary
        for (std::int64_t i = 1; i + 2 <= p.N1; ++i) edges.push_back({node(base + i), node(base + i + 2)});
        for (std::int64_t i = p.N1 + 1; i + 2 <= size; ++i) {
            edges.push_back({node(base + i), node(base + i + 2)});
        }
        if (c + 1 < p.K) edges.push_back({node(base + size), node(base + size + 1)});
    }
    Graph g = Graph::from_edges(node(p.node_count()), edges);
    self_check_h(p, g);
    return g;
}

Graph generate(const FamilyParams& p) { return p.family == Family::G ? gen_g(p) : gen_h(p); }

Clustering natural_clustering(const FamilyParams& p) {
    p.validate();
    std::vector<std::int64_t> labels;
    labels.reserve(static_cast<std::size_t>(p.node_count()));
    for (std::int64_t c = 0; c < p.K; ++c) {
        labels.insert(labels.end(), static_cast<std::size_t>(p.N1), 2 * c);
        labels.insert(labels.end(), static_cast<std::size_t>(p.N2), 2 * c + 1);
    }
    return Clustering::from_labels(labels);
}

Clustering balanced_clustering(std::int64_t n, std::int64_t J) {
    if (n < 1 || n > kMaxNodes) fail(ErrorKind::MalformedInput, fmt::format("node count {} out of range", n));
    if (J < 1 || J > n) fail(ErrorKind::MalformedInput, fmt::format("J must lie in 1..{}, got {}", n, J));
    const std::int64_t L = n / J;
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    // nodes beyond J*L fall into the remainder cluster J
    for (std::int64_t i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::min(i / L, J);
    return Clustering::from_labels(labels);
}

WitnessParams witness_params(std::int64_t K, std::int64_t x, Family family) {
    if (K < 1) fail(ErrorKind::MalformedInput, fmt::format("K must be >= 1, got {}", K));
    if (x < 2) fail(ErrorKind::MalformedInput, fmt::format("x must be >= 2, got {}", x));
    std::int64_t x_squared = 0;
    std::int64_t n2 = 0;
    if (__builtin_mul_overflow(x, x, &x_squared) || __builtin_mul_overflow(x_squared, K, &n2)) {
        fail(ErrorKind::FamilyParameter, fmt::format("x = {} is too large for K = {}", x, K));
    }
    WitnessParams w;
    w.params = {family, K, family == Family::G ? 3 : 6, n2};
    w.J = x * K;
    w.x = x;
    w.params.validate();
    return w;
}

}  // namespace modq
