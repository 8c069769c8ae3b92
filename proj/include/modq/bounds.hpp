#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "modq/families.hpp"
#include "modq/rational.hpp"

namespace modq {

// Closed forms for the two counterexample families. All are exact and throw
// FamilyParameter when (K, N1, N2, J) violate the family's bounds.

/// Exact modularity of the natural clustering of G:
/// 1 - ((N1-1)^2 + (N2-1)^2) / (K (N1+N2-2)^2).
Rational lemma1_value(std::int64_t K, std::int64_t N1, std::int64_t N2);

/// Lower bound on the modularity of U_J on G:
/// 1 - J / (K (N1+N2-2)) - 2 (N1+N2)^2 / ((N1+N2-2)^2 J).
Rational lemma2_lower(std::int64_t K, std::int64_t N1, std::int64_t N2, std::int64_t J);

/// Strict upper bound on the modularity of the natural clustering of H:
/// 1 - K ((4N1-8)^2 + (4N2-8)^2) / (4K (N1+N2-2))^2.
Rational lemma3_upper(std::int64_t K, std::int64_t N1, std::int64_t N2);

/// Strict lower bound on the modularity of U_J on H:
/// 1 - 3J / (2K (N1+N2-4)) - 2 (N1+N2)^2 / ((N1+N2-4)^2 J).
Rational lemma4_lower(std::int64_t K, std::int64_t N1, std::int64_t N2, std::int64_t J);

Rational threshold_half_k(std::int64_t K);                  // 1 - 1/(2K)
Rational threshold_four_kx(std::int64_t K, std::int64_t x);  // 1 - 4/(Kx)

/// True when the balanced lower bound strictly exceeds the natural value (G)
/// or the natural upper bound (H); then Q_N(U_J) > Q_N(V) is guaranteed.
bool sufficient_condition(Family family, std::int64_t K, std::int64_t N1, std::int64_t N2,
                          std::int64_t J);

struct BoundSet {
    Rational natural;         // lemma1_value (G) or lemma3_upper (H)
    Rational balanced_lower;  // lemma2_lower / lemma4_lower
    Rational half_k;
    Rational four_kx;
};

BoundSet bound_set(const WitnessParams& w);

/// For a sequence that should be nondecreasing, the 1-based index i of the
/// first pair with rows[i-1] > rows[i], i.e. the violation lies between rows i
/// and i+1.
std::optional<std::size_t> first_chain_violation(std::span<const Rational> rows);

// --- witness search ----------------------------------------------------------

struct WitnessEvaluation {
    WitnessParams witness;
    std::int64_t n = 0;
    std::int64_t m = 0;
    Rational q_natural;
    Rational q_balanced;
    Rational jaccard_distinct;
    Rational jaccard_ordered;
    BoundSet bounds;

    bool natural_below_half_k = false;    // Q_N(V) < 1 - 1/(2K)
    bool balanced_above_four_kx = false;  // Q_N(U_J) > 1 - 4/(Kx)
    bool chain_holds = false;             // Q_N(V) <= bound <= 1-1/2K <= 1-4/Kx <= lower <= Q_N(U)

    // Set by apply_epsilon.
    double epsilon = 0;
    bool balanced_above_target = false;   // Q_N(U_J) > 1 - eps
    bool similarity_below_eps = false;    // S(V, U_J) < eps, both conventions

    bool holds(bool require_chain) const {
        return natural_below_half_k && balanced_above_target && similarity_below_eps &&
               (!require_chain || chain_holds);
    }
};

/// Generates the instance and evaluates Q_N(V), Q_N(U_J), both Jaccard
/// conventions and the bounds directly.
WitnessEvaluation evaluate_instance(const WitnessParams& w);

/// Fills the epsilon-dependent inequalities.
void apply_epsilon(WitnessEvaluation& e, double epsilon);

inline WitnessEvaluation evaluate_witness(const WitnessParams& w, double epsilon) {
    WitnessEvaluation e = evaluate_instance(w);
    apply_epsilon(e, epsilon);
    return e;
}

struct WitnessOptions {
    bool require_bound_chain = false;
    std::int64_t x_cap = 1'000'000;
    std::int64_t node_cap = 50'000'000;
};

struct WitnessResult {
    WitnessEvaluation evaluation;
    std::int64_t instances_evaluated = 0;
};

/// Doubling-then-bisection search over x for an instance satisfying the
/// witness inequalities. Throws MalformedInput unless 0 < eps < 1/(2K),
/// WitnessNotFound past the caps.
WitnessResult find_witness(std::int64_t K, double epsilon, Family family,
                           const WitnessOptions& options = {});

}  // namespace modq
