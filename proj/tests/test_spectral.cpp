#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spx/error.hpp"
#include "spx/spectral.hpp"

using namespace spx;

namespace {

/// Independent check of every SpectralResult invariant.
void check_result(const Graph& g, const SpectralResult& res, double tol) {
    const int n = g.n();
    REQUIRE(static_cast<int>(res.x.size()) == n);
    double worst = 0.0;
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
        double ax = 0.0;
        for (int j = 0; j < n; ++j) ax += g.has_edge(i, j) ? res.x[j] : 0.0;
        worst = std::max(worst, std::abs(ax - res.lambda * res.x[i]));
        CHECK(res.x[i] >= 0.0);
        CHECK(res.x[i] <= 1.0);
        top = std::max(top, res.x[i]);
        if (!((res.dominant >> i) & 1U)) CHECK(res.x[i] == 0.0);
    }
    CHECK(worst <= tol);
    CHECK(res.residual <= tol);
    if (n > 0) CHECK(top == 1.0);
}

IntPoly to_int_poly(const oracle::Poly& p) {
    IntPoly out;
    for (long long c : p) out.coeffs.emplace_back(c);
    return out.trim();
}

}  // namespace

TEST_CASE("spectral radius of named graphs") {
    CHECK(spectral_radius(complete_graph(7)).lambda == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(spectral_radius(cycle_graph(8)).lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(path_graph(6)).lambda ==
          doctest::Approx(2.0 * std::cos(std::numbers::pi / 7.0)).epsilon(1e-12));
    const std::vector<int> star{1, 5};
    CHECK(spectral_radius(complete_multipartite(star)).lambda == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    const auto empty = spectral_radius(empty_graph(4));
    CHECK(empty.lambda == 0.0);
    check_result(empty_graph(4), empty, kDefaultTol);
}

TEST_CASE("spectral radius against a dense eigensolve") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 24);
        const double p = static_cast<double>(rng() % 100) / 100.0;
        Graph g = oracle::random_graph(rng, n, p);
        if (trial % 3 == 0) g = disjoint_union(g, oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.6));
        const auto res = spectral_radius(g);
        CHECK(res.lambda == doctest::Approx(oracle::eigen_lambda(g)).epsilon(1e-9));
        check_result(g, res, kDefaultTol);
    }
}

TEST_CASE("tolerance bounds and tight tolerances") {
    CHECK_THROWS_AS(spectral_radius(complete_graph(3), 1e-16), Error);
    CHECK_THROWS_AS(spectral_radius(complete_graph(3), 0.0), Error);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(rng, 12, 0.5);
        check_result(g, spectral_radius(g, 1e-13), 1e-13);
    }
}

TEST_CASE("Perron vector of a bipartite component") {
    // The A + I shift keeps power iteration from oscillating on +-lambda.
    const Graph g = disjoint_union(path_graph(2), cycle_graph(6));
    const auto res = spectral_radius(g);
    CHECK(res.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(res.dominant == VertexSet{0b11111100});
    check_result(g, res, kDefaultTol);
}

TEST_CASE("characteristic polynomial against cofactor expansion") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(rng() % 11);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        CHECK(char_poly_exact(g) == to_int_poly(oracle::cofactor_char_poly(g)));
    }
    CHECK(char_poly_exact(complete_graph(3)).to_string() == "x^3 - 3x - 2");
    try {
        char_poly_exact(empty_graph(25));
        FAIL("order above the exact cap accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported_size);
    }
}

TEST_CASE("certification pins lambda to the exact root") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 12), 0.5);
        auto res = spectral_radius(g);
        certify(g, res);
        CHECK(res.exact);
        CHECK(std::abs(res.lambda - oracle::eigen_lambda(g)) <= 1e-9);
    }
}

TEST_CASE("secular equation and closed-form polynomial") {
    for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 1}, {3}, {1, 4}, {5, 3, 3, 1}, {2, 2, 2, 2}}) {
        const Graph k = complete_multipartite(parts);
        CHECK(std::abs(secular_lambda(parts) - oracle::eigen_lambda(k)) <= 1e-10);
        CHECK(multipartite_char_poly(parts) == char_poly_exact(k));
    }
    const std::vector<int> p221{2, 2, 1};
    CHECK(std::abs(secular_lambda(p221) - (1.0 + std::sqrt(5.0))) <= 1e-10);
    CHECK_THROWS_AS(secular_lambda(std::vector<int>{}), Error);
    CHECK_THROWS_AS(secular_lambda(std::vector<int>{2, 0}), Error);
}

TEST_CASE("exact comparison") {
    // Star K_{1,4} and C4 share lambda = 2 with different polynomials.
    const std::vector<int> star{1, 4};
    CHECK(compare_exact(complete_multipartite(star), cycle_graph(4)) == std::strong_ordering::equal);
    CHECK(compare_exact(path_graph(5), cycle_graph(5)) == std::strong_ordering::less);
    CHECK(compare_exact(complete_graph(4), empty_graph(4)) == std::strong_ordering::greater);
    CHECK(compare_exact(empty_graph(3), empty_graph(5)) == std::strong_ordering::equal);
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph a = oracle::random_graph(rng, 7, 0.5);
        const Graph b = oracle::random_graph(rng, 8, 0.4);
        const double la = oracle::eigen_lambda(a);
        const double lb = oracle::eigen_lambda(b);
        if (std::abs(la - lb) < 1e-8) continue;
        CHECK(compare_exact(a, b) == (la < lb ? std::strong_ordering::less : std::strong_ordering::greater));
    }
}

TEST_CASE("adding an edge strictly raises lambda of a connected graph") {
    std::mt19937_64 rng(46);
    int checked = 0;
    while (checked < 50) {
        const Graph g = oracle::random_graph(rng, 8, 0.4);
        if (!g.connected() || g.edge_count() == 28) continue;
        for (int u = 0; u < 8; ++u) {
            for (int v = u + 1; v < 8; ++v) {
                if (g.has_edge(u, v)) continue;
                CHECK(compare_exact(g, g.with_edge(u, v)) == std::strong_ordering::less);
                ++checked;
                u = v = 8;
            }
        }
    }
}

TEST_CASE("Turan Perron vector closed form") {
    for (int r = 2; r <= 5; ++r) {
        for (int n = r; n <= 17; ++n) {
            const auto closed = turan_eigvec_closed(n, r);
            const Graph t = turan_graph(n, r);
            CHECK(std::abs(closed.lambda - oracle::eigen_lambda(t)) <= 1e-10);
            CHECK(closed.k == n % r);
            CHECK(closed.y2 == 1.0);
            const auto res = spectral_radius(t);
            // Vertices of the first k parts (the larger ones) carry y1.
            CHECK(res.x[0] == doctest::Approx(closed.y1).epsilon(1e-9));
            CHECK(res.x[static_cast<std::size_t>(n - 1)] == doctest::Approx(closed.y2).epsilon(1e-9));
            if (n % r != 0) CHECK(closed.y1 < 1.0);
        }
    }
    CHECK_THROWS_AS(turan_eigvec_closed(3, 4), Error);
}

TEST_CASE("floating radius agrees with the largest characteristic root") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
        const IntPoly p = char_poly_exact(g);
        CHECK(p.leading() == 1);
        if (g.n() >= 2) CHECK(p.coeffs[static_cast<std::size_t>(g.n() - 1)] == 0);
        if (g.n() >= 2) CHECK(p.coeffs[static_cast<std::size_t>(g.n() - 2)] == -static_cast<long>(g.edge_count()));
        LargestRoot root(p);
        root.refine_to(Rational(1, 1000000000000LL));
        CHECK(std::abs(spectral_radius(g).lambda - root.estimate()) <= 1e-8);
    }
}

TEST_CASE("exact comparison of listed pairs") {
    const std::vector<int> k33{3, 3};
    const std::vector<int> k24{2, 4};
    CHECK(compare_exact(complete_multipartite(k33), complete_multipartite(k24)) == std::strong_ordering::greater);
    CHECK(compare_exact(cycle_graph(5), path_graph(5)) == std::strong_ordering::greater);
}

TEST_CASE("Turan closed form listed values") {
    const auto even = turan_eigvec_closed(6, 3);
    CHECK(even.y1 == 1.0);
    CHECK(even.lambda == doctest::Approx(4.0).epsilon(1e-12));
    const auto odd = turan_eigvec_closed(5, 2);
    CHECK(odd.lambda == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
    CHECK(odd.y1 == doctest::Approx((std::sqrt(6.0) + 2.0) / (std::sqrt(6.0) + 3.0)).epsilon(1e-12));
    for (int r = 2; r <= 6; ++r) {
        for (int n = r; n <= 30; ++n) CHECK(turan_eigvec_closed(n, r).y1 >= 1.0 - 1.0 / n);
    }
    CHECK_THROWS_AS(secular_lambda(std::vector<int>{2, 2}, 1e-15), Error);
}
