#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spx {

/// One bit per vertex; bit v set means vertex v is in the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet vertex_bit(int v) noexcept { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) noexcept {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) noexcept { return std::popcount(s); }

/// Calls fn(v) for every vertex of `s` in increasing order.
template <typename Fn>
inline void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

/// Immutable simple graph on at most 64 vertices, adjacency stored as one
/// bitset row per vertex.
class Graph {
public:
    Graph() = default;

    /// Validates symmetry, irreflexivity and that no bit exceeds n.
    static Graph from_rows(int n, std::vector<VertexSet> rows);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int n() const noexcept { return static_cast<int>(rows_.size()); }
    std::size_t edge_count() const noexcept { return edges_; }

    VertexSet neighbors(int v) const noexcept { return rows_[v]; }
    std::span<const VertexSet> rows() const noexcept { return rows_; }
    bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
    int degree(int v) const noexcept { return std::popcount(rows_[v]); }
    int min_degree() const noexcept;
    int max_degree() const noexcept;

    /// Number of neighbors of v inside s.
    int degree_into(int v, VertexSet s) const noexcept { return std::popcount(rows_[v] & s); }

    /// Edges with u < v, ordered by (u, v).
    std::vector<std::pair<int, int>> edges() const;
    /// Number of edges with both ends in s.
    std::size_t edges_within(VertexSet s) const noexcept;
    /// Number of edges between disjoint sets a and b.
    std::size_t edges_between(VertexSet a, VertexSet b) const noexcept;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Adds a vertex n() adjacent to `nbrs`.
    Graph with_vertex(VertexSet nbrs) const;
    Graph without_vertex(int v) const;
    /// G[s] relabeled onto 0..|s|-1 preserving vertex order.
    Graph induced(VertexSet s) const;
    /// perm[v] is the new label of vertex v.
    Graph relabeled(std::span<const int> perm) const;

    /// Vertex sets of connected components, ordered by smallest vertex.
    std::vector<VertexSet> components() const;
    bool connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(std::vector<VertexSet> rows, std::size_t edges) : rows_(std::move(rows)), edges_(edges) {}

    std::vector<VertexSet> rows_;
    std::size_t edges_ = 0;

    friend class GraphBuilder;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(int u, int v);
    int n() const noexcept { return static_cast<int>(rows_.size()); }
    Graph build() const;

private:
    std::vector<VertexSet> rows_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// K(n_1, ..., n_r): vertices of part i are consecutive, parts in the given order.
Graph complete_multipartite(std::span<const int> parts);

/// Balanced part sizes of T(n, r), larger parts first.
std::vector<int> turan_parts(int n, int r);
Graph turan_graph(int n, int r);

}  // namespace spx
