#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spx/graph.hpp"

namespace spx {

/// A parsed forbidden graph F together with chi(F) and r = chi(F) - 1, the
/// number of classes of the Turan graph that F-free extremal graphs are
/// compared against.
struct ForbiddenSpec {
    std::string source;
    Graph graph;
    int chi = 0;
    int r = 0;
    std::string name;
};

inline constexpr int kChromaticCap = 12;

/// Grammar: `K<s>` (s >= 2), `F<k>` (k triangles sharing one vertex),
/// `F<k>,<r>` (k copies of K_r sharing one vertex, r >= 3), `g6:<graph6>`.
ForbiddenSpec parse_forbidden(std::string_view spec);

/// k copies of K_clique sharing exactly one vertex (vertex 0).
Graph intersecting_cliques(int k, int clique);

/// True iff some injection V(F) -> V(G) maps every edge of F onto an edge of
/// G (not necessarily induced). When `through` is set, only copies that use
/// that vertex of G are searched for.
bool contains_subgraph(const Graph& g, const Graph& f, std::optional<int> through = std::nullopt);

/// Exact chromatic number by branch and bound; |V(F)| <= 12.
int chromatic_number(const Graph& f);

}  // namespace spx
