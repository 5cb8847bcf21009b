#pragma once

// Slow, independent reference implementations used only by tests. None of
// them call into the library beyond the Graph container itself.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "spx/graph.hpp"

namespace oracle {

using spx::Graph;
using spx::VertexSet;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    spx::GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) b.add_edge(u, v);
        }
    }
    return b.build();
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Upper-triangle bit code of g after relabeling v -> perm[v]; n <= 11.
inline std::uint64_t triangle_code(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
        int a = perm[u];
        int b = perm[v];
        if (a > b) std::swap(a, b);
        code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    return code;
}

/// Minimum triangle code over all n! relabelings: a complete invariant.
inline std::uint64_t min_code(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, triangle_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return min_code(a) == min_code(b);
}

inline std::uint64_t automorphism_count(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Tries every injection V(f) -> V(g), optionally requiring `through` in the image.
inline bool contains(const Graph& g, const Graph& f, std::optional<int> through = std::nullopt) {
    const int n = g.n();
    const int k = f.n();
    if (k > n) return false;
    std::vector<int> image(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            if (through && std::find(image.begin(), image.end(), *through) == image.end()) return false;
            for (auto [u, v] : f.edges()) {
                if (!g.has_edge(image[u], image[v])) return false;
            }
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[i] = v;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    spx::GraphBuilder b(n);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if ((code >> bit) & 1U) b.add_edge(u, v);
        }
    }
    return b.build();
}

/// Every labeled graph on n vertices, deduplicated by min_code. n <= 6.
inline std::vector<Graph> labeled_classes(int n, const std::optional<Graph>& forbid = std::nullopt) {
    const int bits = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        const Graph g = graph_from_code(n, code);
        const std::uint64_t key = min_code(g);
        if (!seen.insert(key).second) continue;
        if (forbid && contains(g, *forbid)) continue;
        out.push_back(g);
    }
    return out;
}

/// Maximum edge count over all labeled F-free graphs on n vertices.
inline std::size_t labeled_ex(int n, const Graph& forbid) {
    const int bits = n * (n - 1) / 2;
    std::size_t best = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        const auto edges = static_cast<std::size_t>(std::popcount(code));
        if (edges <= best) continue;
        if (!contains(graph_from_code(n, code), forbid)) best = edges;
    }
    return best;
}

inline Eigen::MatrixXd adjacency(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (auto [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

/// Largest adjacency eigenvalue by dense symmetric eigensolve.
inline double eigen_lambda(const Graph& g) {
    if (g.n() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g));
    return es.eigenvalues().maxCoeff();
}

inline double eigen_lambda(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    return es.eigenvalues().maxCoeff();
}

/// Integer polynomial, lowest degree first.
using Poly = std::vector<long long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline void poly_add(Poly& acc, const Poly& b, long long sign) {
    if (acc.size() < b.size()) acc.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) acc[i] += sign * b[i];
}

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// det(xI - A) by Laplace expansion along rows, memoized on the set of
/// columns still available.
inline Poly cofactor_char_poly(const Graph& g) {
    const int n = g.n();
    std::unordered_map<std::uint64_t, Poly> memo;
    auto entry = [&](int i, int j) -> Poly {
        if (i == j) return {0, 1};
        return g.has_edge(i, j) ? Poly{-1} : Poly{};
    };
    auto det = [&](auto&& self, int row, std::uint64_t cols) -> Poly {
        if (row == n) return {1};
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Poly acc;
        int position = 0;
        for (int c = 0; c < n; ++c) {
            if (!((cols >> c) & 1U)) continue;
            const Poly e = entry(row, c);
            if (!e.empty()) {
                const Poly minor = self(self, row + 1, cols & ~(std::uint64_t{1} << c));
                poly_add(acc, poly_mul(e, minor), position % 2 == 0 ? 1 : -1);
            }
            ++position;
        }
        poly_trim(acc);
        memo[cols] = acc;
        return acc;
    };
    return det(det, 0, n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

/// Size of a maximum r-cut over all r^n assignments with every part nonempty.
inline std::size_t brute_max_cut(const Graph& g, int r) {
    const int n = g.n();
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::size_t best = 0;
    while (true) {
        std::vector<int> count(static_cast<std::size_t>(r), 0);
        for (int p : a) ++count[p];
        if (std::count(count.begin(), count.end(), 0) == 0) {
            std::size_t cut = 0;
            for (auto [u, v] : g.edges()) cut += a[u] != a[v] ? 1 : 0;
            best = std::max(best, cut);
        }
        int i = 0;
        while (i < n && ++a[i] == r) a[i++] = 0;
        if (i == n) break;
    }
    return best;
}

/// Smallest number of colors by trying every assignment; n <= 8.
inline int brute_chromatic(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        while (true) {
            bool ok = true;
            for (auto [u, v] : g.edges()) {
                if (c[u] == c[v]) {
                    ok = false;
                    break;
                }
            }
            if (ok) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

}  // namespace oracle
