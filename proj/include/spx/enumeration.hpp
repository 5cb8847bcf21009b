#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "spx/graph.hpp"
#include "spx/patterns.hpp"

namespace spx {

inline constexpr int kEnumerationCap = 10;

struct GenerateOptions {
    std::optional<ForbiddenSpec> prune;
    /// Worker threads; output is identical for every value.
    int jobs = 1;
};

/// One canonical representative per isomorphism class of graphs on n
/// vertices (F-free classes only when pruning), sorted by canonical bytes.
///
/// Vertex-by-vertex canonical augmentation: a child built from parent P by
/// adding vertex v is accepted only when deleting the child's canonically
/// last vertex gives a graph isomorphic to P, and duplicates among one
/// parent's children are removed by canonical form. F-containment is
/// monotone, so a child containing F is dropped with its whole subtree.
std::vector<Graph> generate(int n, const GenerateOptions& options = {});

struct IngestOptions {
    std::optional<ForbiddenSpec> prune;
    bool dedupe = false;
};

/// Reads newline-delimited graph6 (blank lines and a `>>graph6<<` header are
/// skipped). Parse errors name the 1-based line number.
std::vector<Graph> ingest(const std::filesystem::path& path, const IngestOptions& options = {});

}  // namespace spx
