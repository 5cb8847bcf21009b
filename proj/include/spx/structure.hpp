#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "spx/graph.hpp"
#include "spx/patterns.hpp"
#include "spx/spectral.hpp"

namespace spx {

enum class CutMode { exhaustive, local_search };

inline constexpr double kExhaustiveBudget = 1e8;
inline constexpr int kLocalSearchStarts = 32;
inline constexpr double kDefaultTheta = 0.05;
inline constexpr double kDefaultEpsilon = 0.001;

/// An r-partition V_1, ..., V_r of V(G) with the edge accounting against the
/// complete r-partite graph K on the same parts.
struct PartitionReport {
    int r = 0;
    /// assignment[v] is the part of v, in first-occurrence order.
    std::vector<int> assignment;
    std::vector<VertexSet> parts;
    std::vector<int> part_sizes;
    std::size_t cross_edges = 0;
    std::vector<std::size_t> internal_edges;
    /// B_i: vertices with a neighbor inside their own part; C_i = V_i \ B_i.
    std::vector<VertexSet> b_sets;
    std::vector<VertexSet> c_sets;
    std::size_t e_in = 0;
    /// |E(K) \ E(G)|
    std::size_t e_out = 0;
    bool balanced = false;
    /// True when the partition is a proven maximum r-cut.
    bool certified = false;
};

/// Partition into exactly r nonempty parts maximizing the number of cross
/// edges. Exhaustive mode (r^n <= 1e8) returns the lexicographically smallest
/// maximizing assignment; local search is best-of-32 single-vertex-move hill
/// climbing, moving v to the part where it has the fewest neighbors.
PartitionReport max_cut_partition(const Graph& g, int r, CutMode mode);

/// Builds the accounting for a given assignment (values in [0, r)).
PartitionReport partition_report(const Graph& g, int r, std::span<const int> assignment);

struct WLReport {
    double theta = 0.0;
    double epsilon = 0.0;
    /// Vertices with at least 2 theta n neighbors inside their own part.
    VertexSet w = 0;
    /// Vertices of degree at most (1 - 1/r - 3 r epsilon^(1/3)) n.
    VertexSet l = 0;
    double w_threshold = 0.0;
    double l_threshold = 0.0;
    bool w_subset_l = false;
    /// |L| <= epsilon^(1/3) n
    bool l_size_bound = false;
};

WLReport wl_classify(const Graph& g, const PartitionReport& report, double theta, double epsilon);

struct Check {
    std::string check_id;
    std::string statement;
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Distance to the threshold, positive when the check holds.
    double slack = 0.0;
};

struct LemmaReport {
    PartitionReport partition;
    SpectralResult spectral;
    std::vector<Check> checks;
};

/// Structural diagnostics for a candidate spectral-extremal graph with excess
/// a, on a maximum r-cut (r from the spec). Failures are findings.
LemmaReport lemma_report(const Graph& g, const ForbiddenSpec& spec, std::int64_t a, double tol = kDefaultTol);

struct InclusionExclusion {
    std::int64_t lhs = 0;  // |A_1 ∩ ... ∩ A_p|
    std::int64_t rhs = 0;  // sum |A_i| - (p - 1) |A_1 ∪ ... ∪ A_p|
};

InclusionExclusion inclusion_exclusion_bound(std::span<const std::set<int>> sets);

}  // namespace spx
