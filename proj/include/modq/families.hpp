#pragma once

#include <cstdint>
#include <string_view>

#include "modq/clustering.hpp"
#include "modq/graph.hpp"

namespace modq {

/// G: K disjoint copies of (N1-path + N2-path).
/// H: K blocks joined in series; each block is a path over N1+N2 nodes with
///    distance-two chords inside the N1 part and inside the N2 part.
enum class Family { G, H };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct FamilyParams {
    Family family = Family::G;
    std::int64_t K = 1;
    std::int64_t N1 = 3;
    std::int64_t N2 = 3;

    std::int64_t block_size() const { return N1 + N2; }
    std::int64_t node_count() const { return K * (N1 + N2); }

    /// Smallest legal N1/N2 for the family (3 for G, 5 for H).
    static std::int64_t min_block(Family f) { return f == Family::G ? 3 : 5; }

    /// Throws FamilyParameter.
    void validate() const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

Graph gen_g(const FamilyParams& p);
Graph gen_h(const FamilyParams& p);
Graph generate(const FamilyParams& p);

/// Cluster 2c+1 is the N1 part of block c, cluster 2c+2 its N2 part.
Clustering natural_clustering(const FamilyParams& p);

/// J contiguous index ranges of floor(n/J) nodes plus a remainder range when
/// J does not divide n. Throws MalformedInput unless 1 <= J <= n.
Clustering balanced_clustering(std::int64_t n, std::int64_t J);

/// Parameters used in the existence constructions: N2 = x^2 K, J = x K and
/// N1 = 3 (G) or 6 (H).
struct WitnessParams {
    FamilyParams params;
    std::int64_t J = 1;
    std::int64_t x = 2;
};

WitnessParams witness_params(std::int64_t K, std::int64_t x, Family family);

}  // namespace modq
