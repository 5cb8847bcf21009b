#include "spx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spx/error.hpp"
#include "spx/kernels.hpp"

namespace spx {

namespace {

void check_tol(double tol) {
    if (!(tol >= kMinTol)) {
        std::ostringstream msg;
        msg << "tolerance " << tol << " below " << kMinTol;
        throw Error(ErrorKind::invalid_spec, msg.str());
    }
}

void check_exact_cap(const Graph& g) {
    if (g.n() > kExactCap) {
        throw Error(ErrorKind::unsupported_size,
                    "exact characteristic polynomial supports n <= 24, got " + std::to_string(g.n()));
    }
}

struct ComponentSolution {
    double lambda = 0.0;
    std::vector<double> x;
    long iters = 0;
};

/// max_i |(A x)_i - lambda x_i| summed in plain vertex order.
double eigen_residual(const Graph& g, std::span<const double> x, double lambda) {
    double residual = 0.0;
    for (int v = 0; v < g.n(); ++v) {
        double sum = 0.0;
        for_each_vertex(g.neighbors(v), [&](int u) { sum += x[static_cast<std::size_t>(u)]; });
        residual = std::max(residual, std::abs(sum - lambda * x[static_cast<std::size_t>(v)]));
    }
    return residual;
}

ComponentSolution power_iterate(const Graph& comp, double tol) {
    const auto m = static_cast<std::size_t>(comp.n());
    ComponentSolution out;
    if (m == 1) {
        out.x = {1.0};
        return out;
    }
    std::vector<double> x(m, 1.0);
    std::vector<double> y(m);
    std::vector<double> ax(m);
    double estimate = 0.0;
    for (long sweep = 1; sweep <= kMaxSweeps; ++sweep) {
        kernels::shifted_adjacency_matvec(comp.rows(), x, y);
        for (std::size_t i = 0; i < m; ++i) ax[i] = y[i] - x[i];
        estimate = kernels::dot(x, ax) / kernels::dot(x, x);
        double residual = 0.0;
        for (std::size_t i = 0; i < m; ++i) residual = std::max(residual, std::abs(ax[i] - estimate * x[i]));
        if (residual <= tol && eigen_residual(comp, x, estimate) <= tol) {
            out.lambda = estimate;
            out.x = std::move(x);
            out.iters = sweep;
            return out;
        }
        const double top = *std::max_element(y.begin(), y.end());
        for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / top;
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "power iteration did not reach residual " << tol << " in " << kMaxSweeps << " sweeps (estimate "
        << estimate << ")";
    throw NonConvergence(msg.str(), estimate);
}

void check_parts(std::span<const int> parts) {
    if (parts.empty()) throw Error(ErrorKind::invalid_spec, "part vector is empty");
    for (int p : parts) {
        if (p <= 0) throw Error(ErrorKind::invalid_spec, "part sizes must be positive, got " + std::to_string(p));
    }
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    check_tol(tol);
    SpectralResult out;
    const auto n = static_cast<std::size_t>(g.n());
    out.x.assign(n, 0.0);
    if (n == 0) return out;

    bool have = false;
    for (VertexSet comp : g.components()) {
        ComponentSolution sol = power_iterate(g.induced(comp), tol);
        out.iters += sol.iters;
        if (have && sol.lambda <= out.lambda) continue;
        have = true;
        out.lambda = sol.lambda;
        out.dominant = comp;
        std::fill(out.x.begin(), out.x.end(), 0.0);
        std::size_t i = 0;
        for_each_vertex(comp, [&](int v) { out.x[static_cast<std::size_t>(v)] = sol.x[i++]; });
    }

    const double top = *std::max_element(out.x.begin(), out.x.end());
    for (double& v : out.x) v /= top;
    out.residual = eigen_residual(g, out.x, out.lambda);
    return out;
}

void certify(const Graph& g, SpectralResult& result, double tol) {
    check_tol(tol);
    check_exact_cap(g);
    if (g.edge_count() == 0) {
        result.lambda = 0.0;
        result.exact = true;
        return;
    }
    LargestRoot root(char_poly_exact(g));
    root.refine_to(to_rational(tol));
    const double lo = root.lo().convert_to<double>();
    const double hi = root.hi().convert_to<double>();
    if (result.lambda < lo - tol || result.lambda > hi + tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "floating spectral radius " << result.lambda << " outside certified interval (" << lo << ", " << hi
            << "]";
        throw Error(ErrorKind::non_convergence, msg.str());
    }
    result.lambda = root.estimate();
    result.exact = true;
}

IntPoly char_poly_exact(const Graph& g) {
    check_exact_cap(g);
    const int n = g.n();
    const auto nn = static_cast<std::size_t>(n);
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<BigInt> coeffs(nn + 1, BigInt(0));
    coeffs[nn] = 1;
    std::vector<BigInt> m(nn * nn, BigInt(0));
    std::vector<BigInt> am(nn * nn, BigInt(0));
    for (int k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < nn; ++i) m[i * nn + i] += coeffs[nn - static_cast<std::size_t>(k) + 1];
        for (int i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < nn; ++j) {
                BigInt sum = 0;
                for_each_vertex(g.neighbors(i), [&](int l) { sum += m[static_cast<std::size_t>(l) * nn + j]; });
                am[static_cast<std::size_t>(i) * nn + j] = std::move(sum);
            }
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < nn; ++i) trace += am[i * nn + i];
        coeffs[nn - static_cast<std::size_t>(k)] = -trace / k;
        std::swap(m, am);
    }
    IntPoly out{std::move(coeffs)};
    return out.trim();
}

IntPoly multipartite_char_poly(std::span<const int> parts) {
    check_parts(parts);
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    const int r = static_cast<int>(parts.size());
    auto shifted = [](int a) { return IntPoly{{BigInt(a), BigInt(1)}}; };

    IntPoly all = monomial(1, 0);
    for (int p : parts) all = all * shifted(p);
    IntPoly sum;
    for (int i = 0; i < r; ++i) {
        IntPoly term = monomial(parts[static_cast<std::size_t>(i)], 0);
        for (int j = 0; j < r; ++j) {
            if (j != i) term = term * shifted(parts[static_cast<std::size_t>(j)]);
        }
        sum = sum + term;
    }
    return monomial(1, n - r) * (all - sum);
}

double secular_lambda(std::span<const int> parts, double tol) {
    check_tol(tol);
    check_parts(parts);
    if (parts.size() == 1) return 0.0;
    const double n = std::accumulate(parts.begin(), parts.end(), 0.0);
    const double biggest = *std::max_element(parts.begin(), parts.end());
    const double smallest = *std::min_element(parts.begin(), parts.end());
    auto f = [&](double lambda) {
        double s = 0.0;
        for (int p : parts) s += p / (lambda + p);
        return s - 1.0;
    };
    double lo = std::max(0.0, n - biggest);
    double hi = n - smallest;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::strong_ordering compare_exact(const Graph& a, const Graph& b) {
    check_exact_cap(a);
    check_exact_cap(b);
    // lambda of an edgeless graph is 0, the largest root of x.
    auto poly = [](const Graph& g) { return g.edge_count() == 0 ? monomial(1, 1) : char_poly_exact(g); };
    return compare_largest_roots(poly(a), poly(b));
}

TuranEigvec turan_eigvec_closed(int n, int r) {
    if (r < 2 || r > n) {
        throw Error(ErrorKind::invalid_spec,
                    "closed-form Turan eigenvector needs 2 <= r <= n, got n=" + std::to_string(n) +
                        " r=" + std::to_string(r));
    }
    const auto parts = turan_parts(n, r);
    TuranEigvec out;
    out.k = n % r;
    out.lambda = secular_lambda(parts, kMinTol);
    const double lower = n / r;
    const double upper = (n + r - 1) / r;
    out.y2 = 1.0;
    out.y1 = (out.lambda + lower) / (out.lambda + upper);
    return out;
}

}  // namespace spx
