#include "spx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spx/error.hpp"

namespace spx {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw Error(ErrorKind::unsupported_size,
                    "graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) {
        throw Error(ErrorKind::invalid_spec,
                    "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
    }
}

}  // namespace

Graph Graph::from_rows(int n, std::vector<VertexSet> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n) {
        throw Error(ErrorKind::invalid_spec, "row count does not match graph order");
    }
    const VertexSet valid = all_vertices(n);
    std::size_t degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~valid) throw Error(ErrorKind::invalid_spec, "adjacency row exceeds graph order");
        if (rows[v] & vertex_bit(v)) throw Error(ErrorKind::invalid_spec, "self-loop at vertex " + std::to_string(v));
        for_each_vertex(rows[v], [&](int u) {
            if (!(rows[u] & vertex_bit(v))) throw Error(ErrorKind::invalid_spec, "adjacency is not symmetric");
        });
        degree_sum += static_cast<std::size_t>(std::popcount(rows[v]));
    }
    return Graph(std::move(rows), degree_sum / 2);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

int Graph::min_degree() const noexcept {
    int d = n() == 0 ? 0 : kMaxVertices;
    for (VertexSet r : rows_) d = std::min(d, std::popcount(r));
    return d;
}

int Graph::max_degree() const noexcept {
    int d = 0;
    for (VertexSet r : rows_) d = std::max(d, std::popcount(r));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n(); ++u) {
        for_each_vertex(rows_[u] & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

std::size_t Graph::edges_within(VertexSet s) const noexcept {
    std::size_t twice = 0;
    for_each_vertex(s, [&](int v) { twice += static_cast<std::size_t>(std::popcount(rows_[v] & s)); });
    return twice / 2;
}

std::size_t Graph::edges_between(VertexSet a, VertexSet b) const noexcept {
    std::size_t total = 0;
    for_each_vertex(a, [&](int v) { total += static_cast<std::size_t>(std::popcount(rows_[v] & b)); });
    return total;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u, n());
    check_vertex(v, n());
    if (u == v) throw Error(ErrorKind::invalid_spec, "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return *this;
    auto rows = rows_;
    rows[u] |= vertex_bit(v);
    rows[v] |= vertex_bit(u);
    return Graph(std::move(rows), edges_ + 1);
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u, n());
    check_vertex(v, n());
    if (!has_edge(u, v)) return *this;
    auto rows = rows_;
    rows[u] &= ~vertex_bit(v);
    rows[v] &= ~vertex_bit(u);
    return Graph(std::move(rows), edges_ - 1);
}

Graph Graph::with_vertex(VertexSet nbrs) const {
    const int v = n();
    check_order(v + 1);
    if (nbrs & ~all_vertices(v)) throw Error(ErrorKind::invalid_spec, "new vertex neighbors exceed graph order");
    auto rows = rows_;
    for_each_vertex(nbrs, [&](int u) { rows[u] |= vertex_bit(v); });
    rows.push_back(nbrs);
    return Graph(std::move(rows), edges_ + static_cast<std::size_t>(std::popcount(nbrs)));
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v, n());
    return induced(all_vertices(n()) & ~vertex_bit(v));
}

Graph Graph::induced(VertexSet s) const {
    s &= all_vertices(n());
    std::vector<int> label(n(), -1);
    int next = 0;
    for_each_vertex(s, [&](int v) { label[v] = next++; });
    std::vector<VertexSet> rows(next, 0);
    std::size_t degree_sum = 0;
    for_each_vertex(s, [&](int v) {
        VertexSet r = 0;
        for_each_vertex(rows_[v] & s, [&](int u) { r |= vertex_bit(label[u]); });
        rows[label[v]] = r;
        degree_sum += static_cast<std::size_t>(std::popcount(r));
    });
    return Graph(std::move(rows), degree_sum / 2);
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n()) throw Error(ErrorKind::invalid_spec, "permutation size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        check_vertex(p, n());
        seen |= vertex_bit(p);
    }
    if (seen != all_vertices(n())) throw Error(ErrorKind::invalid_spec, "relabeling is not a permutation");
    std::vector<VertexSet> rows(n(), 0);
    for (int v = 0; v < n(); ++v) {
        VertexSet r = 0;
        for_each_vertex(rows_[v], [&](int u) { r |= vertex_bit(perm[u]); });
        rows[perm[v]] = r;
    }
    return Graph(std::move(rows), edges_);
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet unseen = all_vertices(n());
    while (unseen) {
        VertexSet comp = unseen & (~unseen + 1);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= rows_[v]; });
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

bool Graph::connected() const { return components().size() <= 1; }

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_vertex(u, n());
    check_vertex(v, n());
    if (u == v) throw Error(ErrorKind::invalid_spec, "self-loop at vertex " + std::to_string(u));
    rows_[u] |= vertex_bit(v);
    rows_[v] |= vertex_bit(u);
    return *this;
}

Graph GraphBuilder::build() const {
    std::size_t degree_sum = 0;
    for (VertexSet r : rows_) degree_sum += static_cast<std::size_t>(std::popcount(r));
    return Graph(rows_, degree_sum / 2);
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorKind::invalid_spec, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.n() + b.n());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
    return out.build();
}

Graph complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw Error(ErrorKind::invalid_spec, "complete multipartite graph needs at least one part");
    long total = 0;
    for (int p : parts) {
        if (p <= 0) throw Error(ErrorKind::invalid_spec, "part sizes must be positive, got " + std::to_string(p));
        total += p;
    }
    check_order(static_cast<int>(std::min<long>(total, kMaxVertices + 1)));
    const int n = static_cast<int>(total);
    std::vector<VertexSet> part_set;
    int start = 0;
    for (int p : parts) {
        part_set.push_back(all_vertices(start + p) & ~all_vertices(start));
        start += p;
    }
    std::vector<VertexSet> rows(n, 0);
    start = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int v = start; v < start + parts[i]; ++v) rows[v] = all_vertices(n) & ~part_set[i];
        start += parts[i];
    }
    return Graph::from_rows(n, std::move(rows));
}

std::vector<int> turan_parts(int n, int r) {
    if (r < 1 || r > n) {
        throw Error(ErrorKind::invalid_spec,
                    "Turan graph needs 1 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
    const int q = n / r;
    const int big = n % r;
    std::vector<int> parts(static_cast<std::size_t>(r), q);
    for (int i = 0; i < big; ++i) parts[i] = q + 1;
    return parts;
}

Graph turan_graph(int n, int r) {
    const auto parts = turan_parts(n, r);
    return complete_multipartite(parts);
}

}  // namespace spx
