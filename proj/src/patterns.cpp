#include "spx/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "spx/error.hpp"
#include "spx/graph6.hpp"

namespace spx {

namespace {

int parse_count(std::string_view token, std::string_view whole) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("forbidden spec '" + std::string(whole) + "': bad number '" + std::string(token) + "'",
                         static_cast<std::size_t>(token.data() - whole.data()));
    }
    return value;
}

/// Placement order for the matcher: each next vertex has as many already
/// placed neighbors as possible, then the highest degree. Isolated vertices
/// end up last.
std::vector<int> match_order(const Graph& f, int root) {
    std::vector<int> order;
    VertexSet placed = 0;
    if (root >= 0) {
        order.push_back(root);
        placed |= vertex_bit(root);
    }
    while (static_cast<int>(order.size()) < f.n()) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int u = 0; u < f.n(); ++u) {
            if (placed & vertex_bit(u)) continue;
            const int links = f.degree_into(u, placed);
            if (links > best_links || (links == best_links && f.degree(u) > best_degree)) {
                best = u;
                best_links = links;
                best_degree = f.degree(u);
            }
        }
        order.push_back(best);
        placed |= vertex_bit(best);
    }
    return order;
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& f, std::vector<int> order) : g_(g), f_(f), order_(std::move(order)) {
        pos_.assign(static_cast<std::size_t>(f.n()), -1);
        for (int k = 0; k < f.n(); ++k) pos_[order_[k]] = k;
        earlier_.resize(order_.size());
        for (int k = 0; k < f.n(); ++k) {
            for_each_vertex(f.neighbors(order_[k]), [&](int u) {
                if (pos_[u] < k) earlier_[k].push_back(pos_[u]);
            });
        }
        degree_at_least_.assign(static_cast<std::size_t>(kMaxVertices + 1), 0);
        for (int d = 0; d <= kMaxVertices; ++d) {
            for (int v = 0; v < g.n(); ++v) {
                if (g.degree(v) >= d) degree_at_least_[d] |= vertex_bit(v);
            }
        }
        image_.assign(order_.size(), -1);
    }

    bool run(VertexSet first_candidates) { return extend(0, 0, first_candidates); }

private:
    bool extend(std::size_t k, VertexSet used, VertexSet forced) {
        if (k == order_.size()) return true;
        VertexSet cand = all_vertices(g_.n()) & ~used & degree_at_least_[f_.degree(order_[k])];
        if (k == 0) cand &= forced;
        for (int j : earlier_[k]) cand &= g_.neighbors(image_[j]);
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            image_[k] = v;
            if (extend(k + 1, used | vertex_bit(v), forced)) return true;
        }
        return false;
    }

    const Graph& g_;
    const Graph& f_;
    std::vector<int> order_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> earlier_;
    std::vector<VertexSet> degree_at_least_;
    std::vector<int> image_;
};

}  // namespace

Graph intersecting_cliques(int k, int clique) {
    if (k < 1 || clique < 2) throw Error(ErrorKind::invalid_spec, "intersecting cliques need k >= 1 and clique >= 2");
    const long n = 1 + static_cast<long>(k) * (clique - 1);
    if (n > kMaxVertices) throw Error(ErrorKind::unsupported_size, "intersecting cliques exceed 64 vertices");
    GraphBuilder b(static_cast<int>(n));
    for (int c = 0; c < k; ++c) {
        std::vector<int> members{0};
        for (int i = 0; i < clique - 1; ++i) members.push_back(1 + c * (clique - 1) + i);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t z = a + 1; z < members.size(); ++z) b.add_edge(members[a], members[z]);
    }
    return b.build();
}

ForbiddenSpec parse_forbidden(std::string_view spec) {
    ForbiddenSpec out;
    out.source = std::string(spec);
    if (spec.empty()) throw ParseError("forbidden spec is empty", 0);

    std::optional<int> known_chi;
    if (spec.substr(0, 3) == "g6:") {
        try {
            out.graph = from_graph6(spec.substr(3));
        } catch (const ParseError& e) {
            throw ParseError("forbidden spec '" + std::string(spec) + "': " + e.what(), e.position() + 3);
        }
        out.name = "g6";
    } else if (spec[0] == 'K') {
        const int s = parse_count(spec.substr(1), spec);
        if (s < 2) throw ParseError("forbidden spec '" + std::string(spec) + "': K<s> needs s >= 2", 1);
        if (s > kMaxVertices) throw Error(ErrorKind::unsupported_size, "K" + std::to_string(s) + " exceeds 64 vertices");
        out.graph = complete_graph(s);
        out.name = "complete";
        known_chi = s;
    } else if (spec[0] == 'F') {
        const auto rest = spec.substr(1);
        const auto comma = rest.find(',');
        const int k = parse_count(rest.substr(0, comma), spec);
        if (k < 1) throw ParseError("forbidden spec '" + std::string(spec) + "': F<k> needs k >= 1", 1);
        int clique = 3;
        if (comma != std::string_view::npos) {
            clique = parse_count(rest.substr(comma + 1), spec);
            if (clique < 3) {
                throw ParseError("forbidden spec '" + std::string(spec) + "': F<k>,<r> needs r >= 3", comma + 2);
            }
        }
        out.graph = intersecting_cliques(k, clique);
        out.name = clique == 3 ? "friendship" : "intersecting-cliques";
        known_chi = clique;
    } else {
        throw ParseError("forbidden spec '" + std::string(spec) + "': unknown family '" + std::string(1, spec[0]) + "'",
                         0);
    }

    if (out.graph.edge_count() == 0) {
        throw Error(ErrorKind::invalid_spec, "forbidden graph '" + out.source + "' has no edges");
    }
    if (out.graph.n() <= kChromaticCap) {
        out.chi = chromatic_number(out.graph);
    } else if (known_chi) {
        out.chi = *known_chi;
    } else {
        out.chi = chromatic_number(out.graph);  // throws the size-cap error
    }
    out.r = out.chi - 1;
    return out;
}

bool contains_subgraph(const Graph& g, const Graph& f, std::optional<int> through) {
    if (f.n() > g.n()) return false;
    if (f.edge_count() > g.edge_count()) return false;
    if (!through) {
        if (f.n() == 0) return true;
        return Matcher(g, f, match_order(f, -1)).run(all_vertices(g.n()));
    }
    const int t = *through;
    if (t < 0 || t >= g.n()) throw Error(ErrorKind::invalid_spec, "anchor vertex out of range");
    for (int u = 0; u < f.n(); ++u) {
        if (f.degree(u) > g.degree(t)) continue;
        if (Matcher(g, f, match_order(f, u)).run(vertex_bit(t))) return true;
    }
    return false;
}

namespace {

int greedy_colors(const Graph& f) {
    std::vector<int> color(static_cast<std::size_t>(f.n()), -1);
    int used = 0;
    for (int v = 0; v < f.n(); ++v) {
        std::uint64_t taken = 0;
        for_each_vertex(f.neighbors(v), [&](int u) {
            if (color[u] >= 0) taken |= std::uint64_t{1} << color[u];
        });
        color[v] = std::countr_one(taken);
        used = std::max(used, color[v] + 1);
    }
    return used;
}

void grow_clique(const Graph& f, VertexSet clique, VertexSet cand, int& best) {
    const int size = set_size(clique);
    if (size > best) best = size;
    if (size + set_size(cand) <= best) return;
    while (cand) {
        if (size + set_size(cand) <= best) return;
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        grow_clique(f, clique | vertex_bit(v), cand & f.neighbors(v), best);
    }
}

/// DSatur-ordered backtracking for a proper coloring with `k` colors.
bool colorable(const Graph& f, int k, std::vector<int>& color, int colored) {
    if (colored == f.n()) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < f.n(); ++v) {
        if (color[v] >= 0) continue;
        std::uint64_t seen = 0;
        for_each_vertex(f.neighbors(v), [&](int u) {
            if (color[u] >= 0) seen |= std::uint64_t{1} << color[u];
        });
        const int sat = std::popcount(seen);
        if (sat > pick_sat || (sat == pick_sat && f.degree(v) > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = f.degree(v);
        }
    }
    std::uint64_t taken = 0;
    for_each_vertex(f.neighbors(pick), [&](int u) {
        if (color[u] >= 0) taken |= std::uint64_t{1} << color[u];
    });
    // A color never used before is interchangeable with any other unused one.
    int max_used = -1;
    for (int c : color) max_used = std::max(max_used, c);
    for (int c = 0; c < k && c <= max_used + 1; ++c) {
        if (taken & (std::uint64_t{1} << c)) continue;
        color[pick] = c;
        if (colorable(f, k, color, colored + 1)) return true;
    }
    color[pick] = -1;
    return false;
}

}  // namespace

int chromatic_number(const Graph& f) {
    if (f.n() > kChromaticCap) {
        throw Error(ErrorKind::unsupported_size,
                    "chromatic number supports at most 12 vertices, got " + std::to_string(f.n()));
    }
    if (f.n() == 0) return 0;
    int lower = 0;
    grow_clique(f, 0, all_vertices(f.n()), lower);
    const int upper = greedy_colors(f);
    for (int k = lower; k < upper; ++k) {
        std::vector<int> color(static_cast<std::size_t>(f.n()), -1);
        if (colorable(f, k, color, 0)) return k;
    }
    return upper;
}

}  // namespace spx
