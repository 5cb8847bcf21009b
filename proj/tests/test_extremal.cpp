#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spx/canonical.hpp"
#include "spx/enumeration.hpp"
#include "spx/extremal.hpp"
#include "spx/patterns.hpp"

using namespace spx;

TEST_CASE("Turan edge counts") {
    CHECK(turan_edges(7, 3) == 16);
    CHECK(turan_edges(9, 2) == 20);
    CHECK(turan_edges(5, 1) == 0);
    CHECK(turan_edges(6, 6) == 15);
    for (int n = 2; n <= 30; ++n) CHECK(turan_edges(n, 2) == static_cast<std::uint64_t>(n * n / 4));
}

TEST_CASE("Turan numbers against labeled brute force") {
    const auto k3 = parse_forbidden("K3");
    const auto k4 = parse_forbidden("K4");
    const auto f2 = parse_forbidden("F2");
    for (int n = 3; n <= 6; ++n) {
        CHECK(ex_number(n, k3).ex == oracle::labeled_ex(n, k3.graph));
        CHECK(ex_number(n, k4).ex == oracle::labeled_ex(n, k4.graph));
    }
    for (int n = 5; n <= 6; ++n) CHECK(ex_number(n, f2).ex == oracle::labeled_ex(n, f2.graph));
    for (int n = 5; n <= 9; ++n) CHECK(ex_number(n, f2).ex == static_cast<std::size_t>(n * n / 4 + 1));
}

TEST_CASE("edge-extremal graphs are saturated") {
    for (const char* text : {"K3", "K4", "F2", "g6:Cr"}) {
        const auto spec = parse_forbidden(text);
        for (int n = 4; n <= 7; ++n) {
            for (const auto& g : ex_number(n, spec).members) {
                CHECK_FALSE(contains_subgraph(g, spec.graph));
                for (int u = 0; u < n; ++u) {
                    for (int v = u + 1; v < n; ++v) {
                        if (!g.has_edge(u, v)) CHECK(contains_subgraph(g.with_edge(u, v), spec.graph));
                    }
                }
            }
        }
    }
}

TEST_CASE("spectral winners are maximal under a dense eigensolve") {
    for (const char* text : {"K3", "F2", "g6:Cr", "K4"}) {
        const auto spec = parse_forbidden(text);
        for (int n = 4; n <= 7; ++n) {
            const auto graphs = generate(n, {spec, 1});
            double best = 0.0;
            for (const auto& g : graphs) best = std::max(best, oracle::eigen_lambda(g));
            const auto sp = spectral_ex(graphs);
            REQUIRE_FALSE(sp.members.empty());
            CHECK(std::abs(sp.lambda_star - best) <= 1e-9);
            std::size_t at_max = 0;
            for (const auto& g : graphs) at_max += std::abs(oracle::eigen_lambda(g) - best) <= 1e-9 ? 1 : 0;
            CHECK(sp.members.size() == at_max);
            for (const auto& w : sp.members) CHECK(std::abs(oracle::eigen_lambda(w.graph) - best) <= 1e-9);
        }
    }
}

TEST_CASE("Turan graphs win for complete graphs") {
    for (int r = 2; r <= 3; ++r) {
        const auto spec = parse_forbidden("K" + std::to_string(r + 1));
        for (int n = r + 1; n <= 8; ++n) {
            const auto report = extremal_report(n, spec);
            const auto t = canonical_graph(turan_graph(n, r));
            REQUIRE(report.edge_extremal.size() == 1);
            REQUIRE(report.spectral_extremal.size() == 1);
            CHECK(report.edge_extremal[0] == t);
            CHECK(report.spectral_extremal[0].graph == t);
            CHECK(report.contained);
            CHECK(report.excess == 0);
            CHECK(report.reference == "turan");
            CHECK(std::abs(report.lambda_star - secular_lambda(turan_parts(n, r))) <= 1e-9);
        }
    }
}

TEST_CASE("bowtie reports") {
    const auto f2 = parse_forbidden("F2");
    const auto report = extremal_report(6, f2);
    CHECK(report.ex == 10);
    CHECK(report.excess == 1);
    CHECK(report.reference == "no external reference");
    CHECK(report.contained);
    // K4 plus a pendant vertex beats K_{1,1,3} at n = 5.
    const auto five = extremal_report(5, f2);
    CHECK(five.lambda_star > 3.0);
    CHECK(five.spectral_extremal.size() == 1);
    CHECK(five.spectral_extremal[0].graph.max_degree() == 4);

    const auto estimate = excess_estimate(f2, 5, 8);
    REQUIRE(estimate.rows.size() == 4);
    for (const auto& row : estimate.rows) CHECK(row.excess == 1);
    CHECK(estimate.stable);
    CHECK(estimate.stable_run == 4);
}

TEST_CASE("job count does not change reports") {
    const auto spec = parse_forbidden("F2");
    const auto a = verify_containment(5, 8, spec, {1, kDefaultTol});
    const auto b = verify_containment(5, 8, spec, {3, kDefaultTol});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].ex == b[i].ex);
        CHECK(a[i].lambda_star == b[i].lambda_star);
        CHECK(a[i].edge_extremal == b[i].edge_extremal);
        REQUIRE(a[i].spectral_extremal.size() == b[i].spectral_extremal.size());
        for (std::size_t j = 0; j < a[i].spectral_extremal.size(); ++j) {
            CHECK(a[i].spectral_extremal[j].graph == b[i].spectral_extremal[j].graph);
        }
    }
}

TEST_CASE("spectral radius lower bound on spectral winners") {
    struct Case {
        const char* spec;
        int lo;
        int hi;
        int a;
    };
    for (const Case c : {Case{"K3", 4, 9, 0}, Case{"F2", 5, 8, 1}}) {
        const auto spec = parse_forbidden(c.spec);
        for (int n = c.lo; n <= c.hi; ++n) {
            const double bound = (1.0 - 1.0 / spec.r) * n - spec.r / (4.0 * n) + 2.0 * c.a / n;
            for (const auto& w : spectral_ex(n, spec).members) CHECK(w.lambda >= bound);
        }
    }
}
