#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spx/graph.hpp"
#include "spx/patterns.hpp"
#include "spx/spectral.hpp"

namespace spx {

/// Floating spectral radii closer than this to the maximum are re-ranked
/// with compare_exact before the argmax set is reported.
inline constexpr double kTieWindow = 1e-9;

struct ExtremalOptions {
    int jobs = 1;
    double tol = kDefaultTol;
};

struct SpectralWinner {
    Graph graph;  // canonical representative
    double lambda = 0.0;
    /// True when membership in the argmax set was decided by exact comparison.
    bool exact = false;
};

struct ExtremalReport {
    int n = 0;
    ForbiddenSpec spec;
    std::size_t classes = 0;  // number of F-free isomorphism classes
    std::size_t ex = 0;
    std::vector<Graph> edge_extremal;
    double lambda_star = 0.0;
    std::vector<SpectralWinner> spectral_extremal;
    bool contained = false;
    std::int64_t excess = 0;
    std::uint64_t turan_edges = 0;
    /// "turan" when ex(n, F) is known in closed form, else "no external reference".
    std::string reference;
};

/// e(T(n, r)) = C(n, 2) - sum C(n_i, 2) over the balanced parts.
std::uint64_t turan_edges(int n, int r);

struct EdgeExtremal {
    std::size_t ex = 0;
    std::vector<Graph> members;
};

struct SpectralExtremal {
    double lambda_star = 0.0;
    std::vector<SpectralWinner> members;
};

/// Max edge count over the F-free classes and every class attaining it.
EdgeExtremal ex_number(int n, const ForbiddenSpec& spec, const ExtremalOptions& options = {});
EdgeExtremal ex_number(std::span<const Graph> f_free);

/// Max spectral radius over the F-free classes with a certified argmax set.
SpectralExtremal spectral_ex(int n, const ForbiddenSpec& spec, const ExtremalOptions& options = {});
SpectralExtremal spectral_ex(std::span<const Graph> f_free, const ExtremalOptions& options = {});

ExtremalReport extremal_report(int n, const ForbiddenSpec& spec, const ExtremalOptions& options = {});

/// One report per n in [n_min, n_max]. Records verdicts only: small-n
/// failures of the containment are findings, not errors.
std::vector<ExtremalReport> verify_containment(int n_min, int n_max, const ForbiddenSpec& spec,
                                               const ExtremalOptions& options = {});

struct ExcessRow {
    int n = 0;
    std::int64_t excess = 0;
};

struct ExcessEstimate {
    std::vector<ExcessRow> rows;
    /// Length of the constant run at the end of the sequence.
    int stable_run = 0;
    bool stable = false;  // stable_run >= 2
    std::string note;
};

/// Stability verdict over rows already computed, in increasing n.
ExcessEstimate summarize_excess(std::vector<ExcessRow> rows);
ExcessEstimate excess_estimate(const ForbiddenSpec& spec, int n_min, int n_max, const ExtremalOptions& options = {});

}  // namespace spx
