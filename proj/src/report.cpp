#include "modq/report.hpp"

#include <algorithm>
#include <exception>

#include <fmt/format.h>

#include "modq/errors.hpp"
#include "modq/quality.hpp"

namespace modq {
namespace {

WitnessParams params_for(Family family, std::int64_t K, std::int64_t N1, std::int64_t x) {
    WitnessParams w = witness_params(K, x, family);
    w.params.N1 = N1;
    w.params.validate();
    return w;
}

// Evaluates f(i) for i in [0, count) with OpenMP, rethrowing the first
// exception by index so failures are reported deterministically.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, Execution exec, F&& f) {
    std::vector<std::optional<T>> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<T> result;
    result.reserve(count);
    for (auto& o : out) result.push_back(std::move(*o));
    return result;
}

std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace

TableSpec TableSpec::published(int table) {
    if (table == 1) return {Family::G, 3, 3, {4, 6, 8, 10}};
    if (table == 2) return {Family::H, 3, 6, {6, 8, 10}};
    fail(ErrorKind::MalformedInput, fmt::format("unknown table {} (expected 1 or 2)", table));
}

TableRow compute_table_row(Family family, std::int64_t K, std::int64_t N1, std::int64_t x) {
    WitnessParams w = params_for(family, K, N1, x);
    WitnessEvaluation e = evaluate_instance(w);
    TableRow row;
    row.witness = w;
    row.n = e.n;
    row.m = e.m;
    row.rows = {e.q_natural,      e.bounds.natural,        e.bounds.half_k, e.bounds.four_kx,
                e.bounds.balanced_lower, e.q_balanced, e.jaccard_ordered};
    row.chain_violation = first_chain_violation(std::span<const Rational>(row.rows.data(), 6));
    row.balanced_wins = row.rows[5] > row.rows[0];
    return row;
}

std::vector<TableRow> compute_table(const TableSpec& spec, Execution exec) {
    std::vector<std::int64_t> xs = spec.xs;
    if (xs.empty()) fail(ErrorKind::MalformedInput, "table needs at least one x value");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return parallel_map<TableRow>(xs.size(), exec, [&](std::size_t i) {
        return compute_table_row(spec.family, spec.K, spec.N1, xs[i]);
    });
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "family,K,N1,N2,J,x,n,m";
    for (int r = 1; r <= 7; ++r) out += fmt::format(",row{}", r);
    for (int r = 1; r <= 7; ++r) out += fmt::format(",row{}_exact", r);
    out += ",chain_ok,chain_violation,balanced_wins\n";
    for (const TableRow& row : rows) {
        const auto& p = row.witness.params;
        out += fmt::format("{},{},{},{},{},{},{},{}", to_string(p.family), p.K, p.N1, p.N2, row.witness.J,
                           row.witness.x, row.n, row.m);
        for (const Rational& r : row.rows) out += "," + to_fixed(r, 4);
        for (const Rational& r : row.rows) out += "," + to_fraction_string(r);
        std::string violation =
            row.chain_violation ? fmt::format("{}-{}", *row.chain_violation, *row.chain_violation + 1) : "";
        out += fmt::format(",{},{},{}\n", flag(!row.chain_violation), violation, flag(row.balanced_wins));
    }
    return out;
}

std::vector<WitnessEvaluation> compute_sweep(const SweepSpec& spec, Execution exec) {
    if (spec.x_first < 2 || spec.x_last < spec.x_first) {
        fail(ErrorKind::MalformedInput,
             fmt::format("x range {}..{} is empty or starts below 2", spec.x_first, spec.x_last));
    }
    if (spec.epsilon && !(*spec.epsilon > 0)) {
        fail(ErrorKind::MalformedInput, fmt::format("epsilon must be positive, got {}", *spec.epsilon));
    }
    const std::int64_t N1 = spec.N1.value_or(spec.family == Family::G ? 3 : 6);
    const auto count = static_cast<std::size_t>(spec.x_last - spec.x_first + 1);
    return parallel_map<WitnessEvaluation>(count, exec, [&](std::size_t i) {
        WitnessEvaluation e = evaluate_instance(
            params_for(spec.family, spec.K, N1, spec.x_first + static_cast<std::int64_t>(i)));
        if (spec.epsilon) apply_epsilon(e, *spec.epsilon);
        return e;
    });
}

std::string sweep_csv(const std::vector<WitnessEvaluation>& rows, bool with_epsilon) {
    std::string out =
        "family,K,N1,N2,J,x,n,m,qn_v,qn_u,jaccard,jaccard_distinct,natural_bound,balanced_lower,"
        "half_k,four_kx,sufficient,v_lt_half_k,u_gt_four_kx,chain_ok";
    if (with_epsilon) out += ",epsilon,u_gt_one_minus_eps,s_lt_eps,witness_holds";
    out += ",qn_v_exact,qn_u_exact,jaccard_exact,jaccard_distinct_exact\n";
    for (const WitnessEvaluation& e : rows) {
        const auto& p = e.witness.params;
        out += fmt::format("{},{},{},{},{},{},{},{}", to_string(p.family), p.K, p.N1, p.N2, e.witness.J,
                           e.witness.x, e.n, e.m);
        for (const Rational* r : {&e.q_natural, &e.q_balanced, &e.jaccard_ordered, &e.jaccard_distinct,
                                  &e.bounds.natural, &e.bounds.balanced_lower, &e.bounds.half_k,
                                  &e.bounds.four_kx}) {
            out += "," + to_fixed(*r, 6);
        }
        out += fmt::format(",{},{},{},{}", flag(e.bounds.balanced_lower > e.bounds.natural),
                           flag(e.natural_below_half_k), flag(e.balanced_above_four_kx), flag(e.chain_holds));
        if (with_epsilon) {
            out += fmt::format(",{},{},{},{}", e.epsilon, flag(e.balanced_above_target),
                               flag(e.similarity_below_eps), flag(e.holds(false)));
        }
        out += fmt::format(",{},{},{},{}\n", to_fraction_string(e.q_natural), to_fraction_string(e.q_balanced),
                           to_fraction_string(e.jaccard_ordered), to_fraction_string(e.jaccard_distinct));
    }
    return out;
}

}  // namespace modq
