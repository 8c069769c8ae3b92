#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modq/bounds.hpp"
#include "modq/execution.hpp"
#include "modq/families.hpp"
#include "modq/rational.hpp"

namespace modq {

/// One column of the reproduction tables: the seven quantities for one x.
///   row 1  exact Q_N(V)
///   row 2  lemma1_value (G) / lemma3_upper (H)
///   row 3  1 - 1/(2K)
///   row 4  1 - 4/(Kx)
///   row 5  lemma2_lower / lemma4_lower
///   row 6  exact Q_N(U_J)
///   row 7  Jaccard S(V, U_J), ordered pairs with self-pairs
struct TableRow {
    WitnessParams witness;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::array<Rational, 7> rows;
    /// Rows 1..6 should be nondecreasing; 1-based index i of the first
    /// violated pair (rows i and i+1).
    std::optional<std::size_t> chain_violation;
    bool balanced_wins = false;  // row 6 > row 1
};

struct TableSpec {
    Family family = Family::G;
    std::int64_t K = 3;
    std::int64_t N1 = 3;
    std::vector<std::int64_t> xs;

    /// Table 1: G, K=3, N1=3, x in {4,6,8,10}. Table 2: H, K=3, N1=6,
    /// x in {6,8,10}.
    static TableSpec published(int table);
};

TableRow compute_table_row(Family family, std::int64_t K, std::int64_t N1, std::int64_t x);

/// Rows come back sorted by x regardless of evaluation order.
std::vector<TableRow> compute_table(const TableSpec& spec, Execution exec = Execution::Parallel);

std::string table_csv(const std::vector<TableRow>& rows);

struct SweepSpec {
    Family family = Family::G;
    std::int64_t K = 3;
    std::optional<std::int64_t> N1;  // family default when empty
    std::int64_t x_first = 2;
    std::int64_t x_last = 2;
    std::optional<double> epsilon;
};

std::vector<WitnessEvaluation> compute_sweep(const SweepSpec& spec, Execution exec = Execution::Parallel);

std::string sweep_csv(const std::vector<WitnessEvaluation>& rows, bool with_epsilon);

}  // namespace modq
