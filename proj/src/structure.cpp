#include "spx/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "spx/error.hpp"

namespace spx {

namespace {

/// Relabels parts in order of first occurrence.
std::vector<int> normalized(std::span<const int> assignment) {
    std::vector<int> map(assignment.size() + 1, -1);
    std::vector<int> out;
    int next = 0;
    for (int p : assignment) {
        if (map[static_cast<std::size_t>(p)] < 0) map[static_cast<std::size_t>(p)] = next++;
        out.push_back(map[static_cast<std::size_t>(p)]);
    }
    return out;
}

class ExhaustiveCut {
public:
    ExhaustiveCut(const Graph& g, int r) : g_(g), r_(r), part_(static_cast<std::size_t>(r), 0) {
        assignment_.assign(static_cast<std::size_t>(g.n()), 0);
    }

    std::vector<int> run() {
        descend(0, 0, 0, 0);
        return best_;
    }

private:
    void descend(int v, int used, std::size_t cut, std::size_t assigned_edges) {
        const int n = g_.n();
        if (v == n) {
            if (used == r_ && (best_.empty() || cut > best_cut_)) {
                best_cut_ = cut;
                best_ = assignment_;
            }
            return;
        }
        // Every edge not yet inside the assigned prefix could still be cut.
        if (!best_.empty() && cut + (g_.edge_count() - assigned_edges) <= best_cut_) return;

        const VertexSet assigned = all_vertices(v);
        const auto back_edges = static_cast<std::size_t>(g_.degree_into(v, assigned));
        const int top = std::min(used + 1, r_);
        for (int p = 0; p < top; ++p) {
            const int now_used = std::max(used, p + 1);
            if (r_ - now_used > n - v - 1) continue;  // not enough vertices left to fill the parts
            const auto inside = static_cast<std::size_t>(g_.degree_into(v, part_[static_cast<std::size_t>(p)]));
            assignment_[static_cast<std::size_t>(v)] = p;
            part_[static_cast<std::size_t>(p)] |= vertex_bit(v);
            descend(v + 1, now_used, cut + back_edges - inside, assigned_edges + back_edges);
            part_[static_cast<std::size_t>(p)] &= ~vertex_bit(v);
        }
    }

    const Graph& g_;
    int r_;
    std::vector<VertexSet> part_;
    std::vector<int> assignment_;
    std::vector<int> best_;
    std::size_t best_cut_ = 0;
};

std::vector<int> local_search(const Graph& g, int r) {
    const int n = g.n();
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<int> best;
    std::size_t best_cut = 0;

    for (int start = 0; start < kLocalSearchStarts; ++start) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> part(static_cast<std::size_t>(n));
        std::uniform_int_distribution<int> pick(0, r - 1);
        for (int i = 0; i < n; ++i) part[order[i]] = i < r ? i : pick(rng);

        std::vector<VertexSet> sets(static_cast<std::size_t>(r), 0);
        for (int v = 0; v < n; ++v) sets[part[v]] |= vertex_bit(v);

        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < n; ++v) {
                const int from = part[v];
                if (set_size(sets[from]) == 1) continue;
                int to = from;
                int fewest = g.degree_into(v, sets[from] & ~vertex_bit(v));
                for (int j = 0; j < r; ++j) {
                    const int d = g.degree_into(v, sets[j]);
                    if (d < fewest) {
                        fewest = d;
                        to = j;
                    }
                }
                if (to == from) continue;
                sets[from] &= ~vertex_bit(v);
                sets[to] |= vertex_bit(v);
                part[v] = to;
                improved = true;
            }
        }

        std::size_t inside = 0;
        for (VertexSet s : sets) inside += g.edges_within(s);
        const std::size_t cut = g.edge_count() - inside;
        auto canon = normalized(part);
        if (best.empty() || cut > best_cut || (cut == best_cut && canon < best)) {
            best_cut = cut;
            best = std::move(canon);
        }
    }
    return best;
}

Check make_check(std::string id, std::string statement, double lhs, double rhs, bool at_least, double slop = 0.0) {
    Check c;
    c.check_id = std::move(id);
    c.statement = std::move(statement);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = at_least ? lhs - rhs : rhs - lhs;
    c.holds = c.slack >= -slop;
    return c;
}

}  // namespace

PartitionReport partition_report(const Graph& g, int r, std::span<const int> assignment) {
    if (static_cast<int>(assignment.size()) != g.n()) throw Error(ErrorKind::invalid_spec, "assignment size mismatch");
    PartitionReport rep;
    rep.r = r;
    rep.assignment.assign(assignment.begin(), assignment.end());
    rep.parts.assign(static_cast<std::size_t>(r), 0);
    for (int v = 0; v < g.n(); ++v) {
        const int p = assignment[static_cast<std::size_t>(v)];
        if (p < 0 || p >= r) throw Error(ErrorKind::invalid_spec, "assignment value out of range");
        rep.parts[static_cast<std::size_t>(p)] |= vertex_bit(v);
    }
    std::size_t complete_cross = 0;
    int total = 0;
    for (VertexSet s : rep.parts) {
        const int size = set_size(s);
        rep.part_sizes.push_back(size);
        rep.internal_edges.push_back(g.edges_within(s));
        rep.e_in += rep.internal_edges.back();
        complete_cross += static_cast<std::size_t>(size) * static_cast<std::size_t>(total);
        total += size;

        VertexSet b = 0;
        for_each_vertex(s, [&](int v) {
            if (g.degree_into(v, s) >= 1) b |= vertex_bit(v);
        });
        rep.b_sets.push_back(b);
        rep.c_sets.push_back(s & ~b);
    }
    rep.cross_edges = g.edge_count() - rep.e_in;
    rep.e_out = complete_cross - rep.cross_edges;
    const auto [lo, hi] = std::minmax_element(rep.part_sizes.begin(), rep.part_sizes.end());
    rep.balanced = *hi - *lo <= 1;
    return rep;
}

PartitionReport max_cut_partition(const Graph& g, int r, CutMode mode) {
    if (r < 2) throw Error(ErrorKind::invalid_spec, "max cut needs r >= 2, got " + std::to_string(r));
    if (r > g.n()) {
        throw Error(ErrorKind::invalid_spec,
                    "cannot split " + std::to_string(g.n()) + " vertices into " + std::to_string(r) + " nonempty parts");
    }
    if (mode == CutMode::exhaustive) {
        if (std::pow(static_cast<double>(r), g.n()) > kExhaustiveBudget) {
            throw Error(ErrorKind::unsupported_size, "exhaustive max cut needs r^n <= 1e8; use local_search");
        }
        auto rep = partition_report(g, r, ExhaustiveCut(g, r).run());
        rep.certified = true;
        return rep;
    }
    return partition_report(g, r, local_search(g, r));
}

WLReport wl_classify(const Graph& g, const PartitionReport& report, double theta, double epsilon) {
    if (!(theta > 0.0 && theta < 1.0) || !(epsilon > 0.0 && epsilon < 1.0)) {
        throw Error(ErrorKind::invalid_spec, "theta and epsilon must lie in (0, 1)");
    }
    const double n = g.n();
    const double r = report.r;
    WLReport out;
    out.theta = theta;
    out.epsilon = epsilon;
    out.w_threshold = 2.0 * theta * n;
    out.l_threshold = (1.0 - 1.0 / r - 3.0 * r * std::cbrt(epsilon)) * n;
    for (VertexSet part : report.parts) {
        for_each_vertex(part, [&](int v) {
            if (g.degree_into(v, part) >= out.w_threshold) out.w |= vertex_bit(v);
        });
    }
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) <= out.l_threshold) out.l |= vertex_bit(v);
    }
    out.w_subset_l = (out.w & ~out.l) == 0;
    out.l_size_bound = set_size(out.l) <= std::cbrt(epsilon) * n;
    return out;
}

LemmaReport lemma_report(const Graph& g, const ForbiddenSpec& spec, std::int64_t a, double tol) {
    const int r = spec.r;
    const double n = g.n();
    const double ad = static_cast<double>(a);
    const CutMode mode =
        std::pow(static_cast<double>(r), g.n()) <= kExhaustiveBudget ? CutMode::exhaustive : CutMode::local_search;

    LemmaReport out;
    out.partition = max_cut_partition(g, r, mode);
    out.spectral = spectral_radius(g, tol);
    const auto& p = out.partition;
    // Floating checks tolerate the eigen-solver's own error.
    const double slop = 10.0 * tol;

    out.checks.push_back(make_check("lambda_lower_bound", "lambda(G) >= (1 - 1/r) n - r/(4n) + 2a/n",
                                    out.spectral.lambda, (1.0 - 1.0 / r) * n - r / (4.0 * n) + 2.0 * ad / n, true,
                                    slop));

    const auto max_internal = *std::max_element(p.internal_edges.begin(), p.internal_edges.end());
    out.checks.push_back(make_check("part_internal_edges", "e(G[V_i]) <= a for every part",
                                    static_cast<double>(max_internal), ad, false));

    int max_b = 0;
    for (VertexSet b : p.b_sets) max_b = std::max(max_b, set_size(b));
    out.checks.push_back(make_check("b_set_size", "|B_i| <= 2a for every part", max_b, 2.0 * ad, false));

    std::size_t missing = 0;
    for (int i = 0; i < r; ++i) {
        const VertexSet outside = all_vertices(g.n()) & ~p.parts[static_cast<std::size_t>(i)];
        for_each_vertex(p.c_sets[static_cast<std::size_t>(i)], [&](int u) {
            missing += static_cast<std::size_t>(set_size(outside & ~g.neighbors(u)));
        });
    }
    out.checks.push_back(make_check("c_full_cross_adjacency",
                                    "every u in C_i is adjacent to all of V \\ V_i (count of missing pairs <= 0)",
                                    static_cast<double>(missing), 0.0, false));

    double min_entry = 1.0;
    for (double x : out.spectral.x) min_entry = std::min(min_entry, x);
    out.checks.push_back(make_check("perron_floor", "min_u x_u >= 1 - 20 a^2 r^2 / n", min_entry,
                                    1.0 - 20.0 * ad * ad * r * r / n, true, slop));

    out.checks.push_back(make_check("in_out_balance", "e(G_in) - e(G_out) <= a",
                                    static_cast<double>(p.e_in) - static_cast<double>(p.e_out), ad, false));

    const auto [lo, hi] = std::minmax_element(p.part_sizes.begin(), p.part_sizes.end());
    out.checks.push_back(make_check("part_balance", "|n_i - n_j| <= 1 for all parts", *hi - *lo, 1.0, false));
    return out;
}

InclusionExclusion inclusion_exclusion_bound(std::span<const std::set<int>> sets) {
    if (sets.empty()) throw Error(ErrorKind::invalid_spec, "inclusion-exclusion bound needs at least one set");
    std::set<int> common = sets[0];
    std::set<int> all;
    std::int64_t sizes = 0;
    for (const auto& s : sets) {
        std::set<int> keep;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::inserter(keep, keep.end()));
        common = std::move(keep);
        all.insert(s.begin(), s.end());
        sizes += static_cast<std::int64_t>(s.size());
    }
    const auto p = static_cast<std::int64_t>(sets.size());
    return {static_cast<std::int64_t>(common.size()), sizes - (p - 1) * static_cast<std::int64_t>(all.size())};
}

}  // namespace spx
