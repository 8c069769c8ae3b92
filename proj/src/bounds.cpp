#include "modq/bounds.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "modq/errors.hpp"
#include "modq/quality.hpp"

namespace modq {
namespace {

void check_family(Family f, std::int64_t K, std::int64_t N1, std::int64_t N2) {
    FamilyParams{f, K, N1, N2}.validate();
}

void check_j(std::int64_t K, std::int64_t N1, std::int64_t N2, std::int64_t J) {
    const std::int64_t n = K * (N1 + N2);
    if (J < 1 || J > n) fail(ErrorKind::FamilyParameter, fmt::format("J must lie in 1..{}, got {}", n, J));
}

BigInt big(std::int64_t v) { return BigInt(v); }

}  // namespace

Rational lemma1_value(std::int64_t K, std::int64_t N1, std::int64_t N2) {
    check_family(Family::G, K, N1, N2);
    BigInt num = big(N1 - 1) * (N1 - 1) + big(N2 - 1) * (N2 - 1);
    BigInt den = big(K) * (N1 + N2 - 2) * (N1 + N2 - 2);
    return 1 - Rational(num, den);
}

Rational lemma2_lower(std::int64_t K, std::int64_t N1, std::int64_t N2, std::int64_t J) {
    check_family(Family::G, K, N1, N2);
    check_j(K, N1, N2, J);
    const std::int64_t s = N1 + N2;
    return 1 - Rational(big(J), big(K) * (s - 2)) -
           Rational(2 * big(s) * s, big(s - 2) * (s - 2) * J);
}

Rational lemma3_upper(std::int64_t K, std::int64_t N1, std::int64_t N2) {
    check_family(Family::H, K, N1, N2);
    BigInt num = big(K) * (big(4 * N1 - 8) * (4 * N1 - 8) + big(4 * N2 - 8) * (4 * N2 - 8));
    BigInt root = big(4) * K * (N1 + N2 - 2);
    return 1 - Rational(num, root * root);
}

Rational lemma4_lower(std::int64_t K, std::int64_t N1, std::int64_t N2, std::int64_t J) {
    check_family(Family::H, K, N1, N2);
    check_j(K, N1, N2, J);
    const std::int64_t s = N1 + N2;
    return 1 - Rational(3 * big(J), 2 * big(K) * (s - 4)) -
           Rational(2 * big(s) * s, big(s - 4) * (s - 4) * J);
}

Rational threshold_half_k(std::int64_t K) {
    if (K < 1) fail(ErrorKind::FamilyParameter, fmt::format("K must be >= 1, got {}", K));
    return 1 - Rational(1, 2 * big(K));
}

Rational threshold_four_kx(std::int64_t K, std::int64_t x) {
    if (K < 1 || x < 1) fail(ErrorKind::FamilyParameter, fmt::format("K and x must be >= 1, got K={}, x={}", K, x));
    return 1 - Rational(4, big(K) * x);
}

bool sufficient_condition(Family family, std::int64_t K, std::int64_t N1, std::int64_t N2,
                          std::int64_t J) {
    if (family == Family::G) return lemma2_lower(K, N1, N2, J) > lemma1_value(K, N1, N2);
    return lemma4_lower(K, N1, N2, J) > lemma3_upper(K, N1, N2);
}

BoundSet bound_set(const WitnessParams& w) {
    const auto& p = w.params;
    BoundSet b;
    if (p.family == Family::G) {
        b.natural = lemma1_value(p.K, p.N1, p.N2);
        b.balanced_lower = lemma2_lower(p.K, p.N1, p.N2, w.J);
    } else {
        b.natural = lemma3_upper(p.K, p.N1, p.N2);
        b.balanced_lower = lemma4_lower(p.K, p.N1, p.N2, w.J);
    }
    b.half_k = threshold_half_k(p.K);
    b.four_kx = threshold_four_kx(p.K, w.x);
    return b;
}

std::optional<std::size_t> first_chain_violation(std::span<const Rational> rows) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1] > rows[i]) return i;
    }
    return std::nullopt;
}

WitnessEvaluation evaluate_instance(const WitnessParams& w) {
    WitnessEvaluation e;
    e.witness = w;
    const auto& p = w.params;
    Graph g = generate(p);
    Clustering natural = natural_clustering(p);
    Clustering balanced = balanced_clustering(p.node_count(), w.J);

    e.n = p.node_count();
    e.m = static_cast<std::int64_t>(g.edge_count());
    e.q_natural = evaluate(g, natural).exact_q_n;
    e.q_balanced = evaluate(g, balanced).exact_q_n;
    e.jaccard_distinct = jaccard_exact(natural, balanced, PairConvention::DistinctUnordered);
    e.jaccard_ordered = jaccard_exact(natural, balanced, PairConvention::OrderedWithSelf);
    e.bounds = bound_set(w);

    e.natural_below_half_k = e.q_natural < e.bounds.half_k;
    e.balanced_above_four_kx = e.q_balanced > e.bounds.four_kx;
    const std::array<Rational, 6> chain{e.q_natural,      e.bounds.natural,        e.bounds.half_k,
                                        e.bounds.four_kx, e.bounds.balanced_lower, e.q_balanced};
    e.chain_holds = !first_chain_violation(chain).has_value();
    return e;
}

void apply_epsilon(WitnessEvaluation& e, double epsilon) {
    const Rational eps(epsilon);
    e.epsilon = epsilon;
    e.balanced_above_target = e.q_balanced > 1 - eps;
    e.similarity_below_eps = e.jaccard_distinct < eps && e.jaccard_ordered < eps;
}

WitnessResult find_witness(std::int64_t K, double epsilon, Family family, const WitnessOptions& options) {
    if (K < 1) fail(ErrorKind::MalformedInput, fmt::format("K must be >= 1, got {}", K));
    if (!std::isfinite(epsilon) || !(epsilon > 0) || !(Rational(epsilon) < Rational(1, 2 * big(K)))) {
        fail(ErrorKind::MalformedInput,
             fmt::format("epsilon must lie in (0, 1/(2K)) = (0, {}), got {}", 1.0 / (2.0 * static_cast<double>(K)), epsilon));
    }

    WitnessResult result;
    auto holds_at = [&](std::int64_t x) -> std::optional<WitnessEvaluation> {
        if (x > options.x_cap) {
            fail(ErrorKind::WitnessNotFound, fmt::format("no witness found for x <= {}", options.x_cap));
        }
        WitnessParams w = witness_params(K, x, family);
        if (w.params.node_count() > options.node_cap) {
            fail(ErrorKind::WitnessNotFound,
                 fmt::format("no witness found before the instance size reached {} nodes (x = {})",
                             options.node_cap, x));
        }
        ++result.instances_evaluated;
        WitnessEvaluation e = evaluate_witness(w, epsilon);
        if (e.holds(options.require_bound_chain)) return e;
        return std::nullopt;
    };

    // Smallest x whose N2 = x^2 K meets the family's block minimum.
    std::int64_t x_min = 2;
    while (x_min * x_min * K < FamilyParams::min_block(family)) ++x_min;

    std::int64_t lo = x_min - 1;  // largest x known to fail (or below the domain)
    std::int64_t hi = x_min;
    std::optional<WitnessEvaluation> best = holds_at(hi);
    while (!best) {
        lo = hi;
        hi *= 2;
        best = holds_at(hi);
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (auto e = holds_at(mid)) {
            hi = mid;
            best = std::move(e);
        } else {
            lo = mid;
        }
    }
    result.evaluation = std::move(*best);
    return result;
}

}  // namespace modq
