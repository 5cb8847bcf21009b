#pragma once

#include <compare>
#include <span>
#include <vector>

#include "spx/graph.hpp"
#include "spx/poly.hpp"

namespace spx {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kMinTol = 1e-14;
inline constexpr long kMaxSweeps = 1'000'000;
inline constexpr int kExactCap = 24;

struct SpectralResult {
    double lambda = 0.0;
    /// Perron vector of the dominant component, max entry exactly 1, zero
    /// on every other component.
    std::vector<double> x;
    /// max_i |(A x)_i - lambda x_i|
    double residual = 0.0;
    long iters = 0;
    /// Set when lambda was certified against the exact characteristic polynomial.
    bool exact = false;
    VertexSet dominant = 0;
};

/// Power iteration on A + I per connected component (the shift removes the
/// -lambda eigenvalue of bipartite components), Rayleigh quotient estimate
/// each sweep, stop once the eigen-equation residual is within `tol`.
/// lambda(G) is the max over components.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol);

/// Replaces lambda by the midpoint of an exact isolating interval of width
/// <= tol around the largest root of det(xI - A) and sets `exact`.
void certify(const Graph& g, SpectralResult& result, double tol = kDefaultTol);

/// det(xI - A) by Faddeev-LeVerrier in exact integers; n <= 24.
IntPoly char_poly_exact(const Graph& g);

/// x^(n-r) (1 - sum n_i / (x + n_i)) prod (x + n_j), expanded exactly.
IntPoly multipartite_char_poly(std::span<const int> parts);

/// Largest root of sum n_i / (lambda + n_i) = 1, i.e. the spectral radius of
/// the complete multipartite graph with the given parts. Bisection on
/// [n - max part, n - min part], where the left side is strictly decreasing.
double secular_lambda(std::span<const int> parts, double tol = kDefaultTol);

/// Exact order of lambda(a) against lambda(b); both orders <= 24.
std::strong_ordering compare_exact(const Graph& a, const Graph& b);

/// Two-valued Perron vector of T(n, r): y1 on the k = n mod r parts of size
/// ceil(n/r), y2 = 1 on the parts of size floor(n/r).
struct TuranEigvec {
    double y1 = 1.0;
    double y2 = 1.0;
    double lambda = 0.0;
    int k = 0;
};

TuranEigvec turan_eigvec_closed(int n, int r);

}  // namespace spx
