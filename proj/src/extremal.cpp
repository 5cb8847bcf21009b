#include "spx/extremal.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "spx/canonical.hpp"
#include "spx/enumeration.hpp"
#include "spx/error.hpp"
#include "spx/graph6.hpp"

namespace spx {

namespace {

std::vector<Graph> f_free_classes(int n, const ForbiddenSpec& spec, const ExtremalOptions& options) {
    return generate(n, GenerateOptions{spec, options.jobs});
}

std::vector<double> radii(std::span<const Graph> graphs, const ExtremalOptions& options) {
    std::vector<double> out(graphs.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < graphs.size(); i += step) {
            try {
                out[i] = spectral_radius(graphs[i], options.tol).lambda;
            } catch (const NonConvergence& e) {
                throw NonConvergence(std::string(e.what()) + " on graph " + to_graph6(graphs[i]), e.estimate());
            }
        }
    };
    const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    if (jobs == 1 || graphs.size() < 2) {
        work(0, 1);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            try {
                work(w, jobs);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::set<std::string> canonical_set(std::span<const Graph> graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) out.insert(canonical_form(g).bytes);
    return out;
}

}  // namespace

std::uint64_t turan_edges(int n, int r) {
    const auto parts = turan_parts(n, r);
    auto pairs = [](std::uint64_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; };
    std::uint64_t total = pairs(static_cast<std::uint64_t>(n));
    for (int p : parts) total -= pairs(static_cast<std::uint64_t>(p));
    return total;
}

EdgeExtremal ex_number(std::span<const Graph> f_free) {
    EdgeExtremal out;
    for (const auto& g : f_free) out.ex = std::max(out.ex, g.edge_count());
    for (const auto& g : f_free) {
        if (g.edge_count() == out.ex) out.members.push_back(g);
    }
    return out;
}

EdgeExtremal ex_number(int n, const ForbiddenSpec& spec, const ExtremalOptions& options) {
    const auto classes = f_free_classes(n, spec, options);
    return ex_number(classes);
}

SpectralExtremal spectral_ex(std::span<const Graph> f_free, const ExtremalOptions& options) {
    SpectralExtremal out;
    if (f_free.empty()) return out;
    const auto lambda = radii(f_free, options);
    const double top = *std::max_element(lambda.begin(), lambda.end());

    std::vector<std::size_t> near;
    for (std::size_t i = 0; i < f_free.size(); ++i) {
        if (lambda[i] >= top - kTieWindow) near.push_back(i);
    }
    if (near.size() == 1) {
        out.lambda_star = lambda[near[0]];
        out.members.push_back({f_free[near[0]], lambda[near[0]], false});
        return out;
    }

    std::size_t best = near[0];
    for (std::size_t i : near) {
        if (compare_exact(f_free[i], f_free[best]) == std::strong_ordering::greater) best = i;
    }
    out.lambda_star = lambda[best];
    for (std::size_t i : near) {
        if (i == best || compare_exact(f_free[i], f_free[best]) == std::strong_ordering::equal) {
            out.members.push_back({f_free[i], lambda[i], true});
        }
    }
    return out;
}

SpectralExtremal spectral_ex(int n, const ForbiddenSpec& spec, const ExtremalOptions& options) {
    const auto classes = f_free_classes(n, spec, options);
    return spectral_ex(classes, options);
}

ExtremalReport extremal_report(int n, const ForbiddenSpec& spec, const ExtremalOptions& options) {
    if (spec.r < 1 || spec.r > n) {
        throw Error(ErrorKind::invalid_spec, "need 1 <= r <= n for the Turan comparison, got n=" + std::to_string(n) +
                                                 " r=" + std::to_string(spec.r));
    }
    const auto classes = f_free_classes(n, spec, options);
    ExtremalReport report;
    report.n = n;
    report.spec = spec;
    report.classes = classes.size();

    auto edge = ex_number(classes);
    report.ex = edge.ex;
    report.edge_extremal = std::move(edge.members);

    auto spectral = spectral_ex(classes, options);
    report.lambda_star = spectral.lambda_star;
    report.spectral_extremal = std::move(spectral.members);

    const auto edge_set = canonical_set(report.edge_extremal);
    report.contained = std::all_of(report.spectral_extremal.begin(), report.spectral_extremal.end(),
                                   [&](const SpectralWinner& w) { return edge_set.count(canonical_form(w.graph).bytes); });
    report.turan_edges = turan_edges(n, spec.r);
    report.excess = static_cast<std::int64_t>(report.ex) - static_cast<std::int64_t>(report.turan_edges);
    report.reference = spec.name == "complete" ? "turan" : "no external reference";
    return report;
}

std::vector<ExtremalReport> verify_containment(int n_min, int n_max, const ForbiddenSpec& spec,
                                               const ExtremalOptions& options) {
    if (n_min > n_max) throw Error(ErrorKind::invalid_spec, "n-min exceeds n-max");
    std::vector<ExtremalReport> out;
    for (int n = n_min; n <= n_max; ++n) out.push_back(extremal_report(n, spec, options));
    return out;
}

ExcessEstimate summarize_excess(std::vector<ExcessRow> rows) {
    if (rows.empty()) throw Error(ErrorKind::invalid_spec, "no excess values to summarize");
    ExcessEstimate out;
    out.rows = std::move(rows);
    out.stable_run = 1;
    for (std::size_t i = out.rows.size() - 1; i > 0 && out.rows[i - 1].excess == out.rows[i].excess; --i) {
        ++out.stable_run;
    }
    out.stable = out.stable_run >= 2;
    out.note = out.stable ? "constant at " + std::to_string(out.rows.back().excess) + " over the last " +
                                std::to_string(out.stable_run) + " values"
                          : "not stabilized";
    return out;
}

ExcessEstimate excess_estimate(const ForbiddenSpec& spec, int n_min, int n_max, const ExtremalOptions& options) {
    if (n_min > n_max) throw Error(ErrorKind::invalid_spec, "n-min exceeds n-max");
    std::vector<ExcessRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const auto edge = ex_number(n, spec, options);
        rows.push_back({n, static_cast<std::int64_t>(edge.ex) - static_cast<std::int64_t>(turan_edges(n, spec.r))});
    }
    return summarize_excess(std::move(rows));
}

}  // namespace spx
