#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "modq/clustering.hpp"
#include "modq/graph.hpp"

namespace modq {

// Edge-list text: header "n m" followed by m lines "u v" (1-based).
// Clustering text: header "n K" followed by n lines "node label".
// In both, blank lines and lines whose first non-blank character is '#' are
// skipped. Errors carry the 1-based line number.

Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Clustering read_clustering(std::string_view text);
std::string write_clustering(const Clustering& c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

inline Graph load_graph(const std::filesystem::path& path) { return read_edge_list(read_file(path)); }
inline Clustering load_clustering(const std::filesystem::path& path) {
    return read_clustering(read_file(path));
}

}  // namespace modq
