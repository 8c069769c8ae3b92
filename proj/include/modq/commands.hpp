#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "modq/families.hpp"
#include "modq/quality.hpp"
#include "modq/report.hpp"
#include "modq/search.hpp"

namespace modq::cli {

// Each command writes CSV to `out` and throws modq::Error on failure.

struct GenerateOptions {
    FamilyParams params;
    std::vector<std::int64_t> Js;
    std::filesystem::path out_prefix;  // writes <prefix>.edges, <prefix>.V.clu, <prefix>.U<J>.clu
};
void generate(const GenerateOptions& opts, std::ostream& out);

struct ScoreOptions {
    std::filesystem::path graph;
    std::filesystem::path clustering;
    std::optional<double> gamma;
};
void score(const ScoreOptions& opts, std::ostream& out);

void table(const TableSpec& spec, std::ostream& out);

/// With an epsilon, also runs the witness search and appends it as a
/// '#'-comment line.
void sweep(const SweepSpec& spec, std::ostream& out);

struct MaximizeOptions {
    std::filesystem::path graph;
    SearchMethod method = SearchMethod::Exhaustive;
    QualityFunction quality;
    std::optional<ClusterId> K;
    std::optional<std::filesystem::path> clustering_out;
};
void maximize(const MaximizeOptions& opts, std::ostream& out);

}  // namespace modq::cli
