#include "spx/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "spx/graph6.hpp"

namespace spx {

namespace {

struct Cell {
    VertexSet set;
    /// Not yet used as a splitter since it last changed.
    bool pending;
};

using Cells = std::vector<Cell>;

/// Splits cells until every cell is equitable with respect to every other.
/// Fragments are ordered by ascending neighbor count and the worklist is
/// scanned by position, so the result depends only on the ordered
/// partition's structure, never on vertex names. A split cell that was
/// already used as a splitter only queues its fragments other than the
/// first largest one: counts into that fragment follow from the rest.
void refine(const Graph& g, Cells& cells) {
    std::array<int, kMaxVertices> count{};
    for (;;) {
        std::size_t s = 0;
        while (s < cells.size() && !cells[s].pending) ++s;
        if (s == cells.size()) return;
        cells[s].pending = false;
        const VertexSet splitter = cells[s].set;

        for (std::size_t c = 0; c < cells.size(); ++c) {
            const VertexSet cell = cells[c].set;
            if (set_size(cell) == 1) continue;
            int lo = kMaxVertices + 1;
            int hi = -1;
            for_each_vertex(cell, [&](int v) {
                count[v] = g.degree_into(v, splitter);
                lo = std::min(lo, count[v]);
                hi = std::max(hi, count[v]);
            });
            if (lo == hi) continue;

            Cells fragments;
            VertexSet rest = cell;
            std::size_t largest = 0;
            while (rest) {
                int next = kMaxVertices + 1;
                for_each_vertex(rest, [&](int v) { next = std::min(next, count[v]); });
                VertexSet frag = 0;
                for_each_vertex(rest, [&](int v) {
                    if (count[v] == next) frag |= vertex_bit(v);
                });
                if (set_size(frag) > set_size(fragments.empty() ? 0 : fragments[largest].set)) {
                    largest = fragments.size();
                }
                fragments.push_back({frag, true});
                rest &= ~frag;
            }
            if (!cells[c].pending) fragments[largest].pending = false;
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), fragments.begin(), fragments.end());
            c += fragments.size() - 1;
        }
    }
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<int> parent;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.n()) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        if (n_ == 0) {
            out.form = CanonicalForm{to_graph6(g_), 1};
            return out;
        }
        Cells cells{Cell{all_vertices(n_), true}};
        std::vector<int> prefix;
        search(cells, prefix, true);

        out.label.assign(static_cast<std::size_t>(n_), 0);
        for (int p = 0; p < n_; ++p) out.label[best_perm_[p]] = p;
        out.form.bytes = to_graph6(g_.relabeled(out.label));
        out.form.aut_size = group_order();
        return out;
    }

private:
    struct FirstPathLevel {
        std::vector<int> prefix;
        VertexSet cell;
        int chosen;
    };

    void search(Cells& cells, std::vector<int>& prefix, bool first_path) {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells, prefix);
            return;
        }

        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const int size = set_size(cells[c].set);
            if (size > 1 && (target == cells.size() || size < set_size(cells[target].set))) target = c;
        }

        const VertexSet cell = cells[target].set;
        const int depth = static_cast<int>(prefix.size());
        if (first_path) first_path_.push_back({prefix, cell, std::countr_zero(cell)});

        // Orbits of the generators that fix the prefix, absorbed as they appear.
        UnionFind orbits(n_);
        std::size_t absorbed = 0;
        VertexSet explored = 0;
        bool first_child = true;
        for_each_vertex(cell, [&](int w) {
            if (unwind_ >= 0) return;
            for (; absorbed < generators_.size(); ++absorbed) {
                const auto& gamma = generators_[absorbed];
                if (std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; })) {
                    for (int v = 0; v < n_; ++v) orbits.unite(v, gamma[v]);
                }
            }
            const int root = orbits.find(w);
            bool equivalent = false;
            for_each_vertex(explored, [&](int u) { equivalent = equivalent || orbits.find(u) == root; });
            if (equivalent) return;
            explored |= vertex_bit(w);

            Cells child = cells;
            for (auto& c : child) c.pending = false;
            child[target].set = cell & ~vertex_bit(w);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), Cell{vertex_bit(w), true});
            prefix.push_back(w);
            search(child, prefix, first_path && first_child);
            prefix.pop_back();
            first_child = false;
            if (unwind_ == depth) unwind_ = -1;
        });
    }

    UnionFind stabilizer_orbits(const std::vector<int>& prefix) const {
        UnionFind uf(n_);
        for (const auto& gamma : generators_) {
            const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
        }
        return uf;
    }

    void leaf(const Cells& cells, const std::vector<int>& prefix) {
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) perm[p] = std::countr_zero(cells[p].set);

        std::vector<std::uint64_t> key(static_cast<std::size_t>(n_), 0);
        for (int j = 1; j < n_; ++j) {
            const VertexSet row = g_.neighbors(perm[j]);
            std::uint64_t col = 0;
            for (int i = 0; i < j; ++i) {
                if (row & vertex_bit(perm[i])) col |= std::uint64_t{1} << (63 - i);
            }
            key[j] = col;
        }

        if (first_perm_.empty()) {
            first_perm_ = best_perm_ = perm;
            first_key_ = best_key_ = std::move(key);
            first_prefix_ = prefix;
            return;
        }
        if (key == first_key_) {
            // The automorphism fixes the common prefix, so the subtree below
            // the divergence point mirrors the first path's: return there.
            add_generator(first_perm_, perm);
            std::size_t diverge = 0;
            while (diverge < prefix.size() && diverge < first_prefix_.size() && prefix[diverge] == first_prefix_[diverge]) {
                ++diverge;
            }
            unwind_ = static_cast<int>(diverge);
        } else if (key == best_key_) {
            add_generator(best_perm_, perm);
        } else if (key < best_key_) {
            best_key_ = std::move(key);
            best_perm_ = std::move(perm);
        }
    }

    void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) gamma[from[p]] = to[p];
        generators_.push_back(std::move(gamma));
    }

    std::optional<std::uint64_t> group_order() const {
        std::uint64_t order = 1;
        for (const auto& level : first_path_) {
            UnionFind uf = stabilizer_orbits(level.prefix);
            const int root = uf.find(level.chosen);
            std::uint64_t orbit = 0;
            for_each_vertex(level.cell, [&](int v) { orbit += uf.find(v) == root ? 1 : 0; });
            if (order > UINT64_MAX / orbit) return std::nullopt;
            order *= orbit;
        }
        return order;
    }

    const Graph& g_;
    int n_;
    std::vector<int> first_perm_;
    std::vector<int> best_perm_;
    std::vector<int> first_prefix_;
    std::vector<std::uint64_t> first_key_;
    std::vector<std::uint64_t> best_key_;
    std::vector<std::vector<int>> generators_;
    std::vector<FirstPathLevel> first_path_;
    /// Depth to return to after an automorphism to the first leaf, or -1.
    int unwind_ = -1;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).label); }

}  // namespace spx
