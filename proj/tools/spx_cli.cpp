// spx: command-line front end for the F-free extremal toolkit.
//
// Exit status: 0 ok, 1 internal failure, 2 usage error, 3 parse error,
// 4 size-cap violation. Data goes to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spx/enumeration.hpp"
#include "spx/error.hpp"
#include "spx/extremal.hpp"
#include "spx/graph6.hpp"
#include "spx/patterns.hpp"
#include "spx/report.hpp"
#include "spx/spectral.hpp"
#include "spx/structure.hpp"

namespace {

int env_jobs() {
    if (const char* v = std::getenv("JOBS")) {
        const int jobs = std::atoi(v);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

double env_tol() {
    if (const char* v = std::getenv("TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(v, &end);
        if (end != v && tol > 0.0) return tol;
    }
    return spx::kDefaultTol;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size()) {
            throw spx::ParseError("--parts: bad part '" + token + "' at byte " + std::to_string(pos), pos);
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    return parts;
}

void print_json(const spx::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge- and spectral-extremal F-free graphs at small order"};
    app.require_subcommand(1);

    int jobs = env_jobs();
    double tol = env_tol();
    bool json = false;

    // gen
    auto* gen = app.add_subcommand("gen", "Enumerate graphs up to isomorphism as graph6");
    int gen_n = 0;
    std::string gen_forbid;
    std::string gen_out;
    std::string gen_in;
    bool gen_dedupe = false;
    gen->add_option("--n", gen_n, "Order")->check(CLI::PositiveNumber);
    gen->add_option("--forbid", gen_forbid, "Forbidden graph: K<s>, F<k>, F<k>,<r>, g6:<graph6>");
    gen->add_option("--out", gen_out, "Write graph6 lines here instead of stdout");
    gen->add_option("--in", gen_in, "Filter an existing graph6 corpus instead of generating");
    gen->add_flag("--dedupe", gen_dedupe, "With --in: keep one graph per isomorphism class");
    gen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    // extremal
    auto* extremal = app.add_subcommand("extremal", "ex(n,F), Ex(n,F) and Ex_sp(n,F) by exhaustive search");
    int ext_n = 0;
    std::string ext_forbid;
    extremal->add_option("--n", ext_n, "Order")->required();
    extremal->add_option("--forbid", ext_forbid, "Forbidden graph")->required();
    extremal->add_flag("--json", json, "JSON output");
    extremal->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    extremal->add_option("--tol", tol, "Eigen-residual tolerance");

    // verify
    auto* verify = app.add_subcommand("verify", "Check Ex_sp(n,F) within Ex(n,F) for a range of n");
    std::string ver_forbid;
    int ver_min = 0;
    int ver_max = 0;
    verify->add_option("--forbid", ver_forbid, "Forbidden graph")->required();
    verify->add_option("--n-min", ver_min, "Smallest order")->required();
    verify->add_option("--n-max", ver_max, "Largest order")->required();
    verify->add_flag("--json", json, "JSON output");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--tol", tol, "Eigen-residual tolerance");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "Spectral radius and Perron vector of one graph");
    std::string spec_g6;
    bool spec_exact = false;
    spectral->add_option("--g6", spec_g6, "Graph in graph6")->required();
    spectral->add_option("--tol", tol, "Eigen-residual tolerance");
    spectral->add_flag("--exact", spec_exact, "Certify lambda against the exact characteristic polynomial");
    spectral->add_flag("--json", json, "JSON output");

    // secular
    auto* secular = app.add_subcommand("secular", "Spectral radius and characteristic polynomial of K(n_1..n_r)");
    std::string sec_parts;
    secular->add_option("--parts", sec_parts, "Comma-separated part sizes, e.g. 2,2,1")->required();
    secular->add_option("--tol", tol, "Bisection tolerance");
    secular->add_flag("--json", json, "JSON output");

    // turan
    auto* turan = app.add_subcommand("turan", "Edge count, spectral radius and Perron vector of T(n,r)");
    int tur_n = 0;
    int tur_r = 0;
    turan->add_option("--n", tur_n, "Order")->required();
    turan->add_option("--r", tur_r, "Number of parts")->required();
    turan->add_flag("--json", json, "JSON output");

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "Structural checks on a candidate spectral-extremal graph");
    std::string diag_g6;
    std::string diag_forbid;
    long long diag_a = 0;
    double theta = spx::kDefaultTheta;
    double epsilon = spx::kDefaultEpsilon;
    diagnose->add_option("--g6", diag_g6, "Graph in graph6")->required();
    diagnose->add_option("--forbid", diag_forbid, "Forbidden graph")->required();
    diagnose->add_option("--a", diag_a, "Excess ex(n,F) - e(T(n,r))")->required();
    diagnose->add_option("--theta", theta, "W threshold parameter (non-canonical default 0.05)");
    diagnose->add_option("--epsilon", epsilon, "L threshold parameter (non-canonical default 0.001)");
    diagnose->add_option("--tol", tol, "Eigen-residual tolerance");
    diagnose->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const spx::ExtremalOptions options{jobs, tol};

        if (*gen) {
            std::vector<spx::Graph> graphs;
            std::optional<spx::ForbiddenSpec> prune;
            if (!gen_forbid.empty()) prune = spx::parse_forbidden(gen_forbid);
            if (!gen_in.empty()) {
                graphs = spx::ingest(gen_in, spx::IngestOptions{prune, gen_dedupe});
            } else {
                if (gen_n == 0) {
                    std::cerr << "gen: --n or --in is required\n";
                    return 2;
                }
                graphs = spx::generate(gen_n, spx::GenerateOptions{prune, jobs});
            }
            if (!gen_out.empty()) {
                std::ofstream out(gen_out);
                if (!out) throw spx::Error(spx::ErrorKind::io, "cannot write '" + gen_out + "'");
                for (const auto& g : graphs) out << spx::to_graph6(g) << "\n";
                std::cout << graphs.size() << "\n";
            } else {
                for (const auto& g : graphs) std::cout << spx::to_graph6(g) << "\n";
                std::cerr << graphs.size() << " graphs\n";
            }
        } else if (*extremal) {
            const auto report = spx::extremal_report(ext_n, spx::parse_forbidden(ext_forbid), options);
            if (json) {
                print_json(spx::to_json(report));
            } else {
                std::cout << spx::extremal_text(report);
            }
        } else if (*verify) {
            const auto spec = spx::parse_forbidden(ver_forbid);
            const auto reports = spx::verify_containment(ver_min, ver_max, spec, options);
            std::vector<spx::ExcessRow> rows;
            for (const auto& r : reports) rows.push_back({r.n, r.excess});
            const auto excess = spx::summarize_excess(std::move(rows));
            if (json) {
                spx::Json rows = spx::Json::array();
                for (const auto& r : reports) rows.push_back(spx::to_json(r));
                print_json(spx::Json{{"forbid", spx::to_json(spec)}, {"rows", rows}, {"excess", spx::to_json(excess)}});
            } else {
                std::cout << "forbidden " << spec.source << " (chi=" << spec.chi << ", r=" << spec.r << ")\n";
                std::cout << spx::containment_table(reports);
                std::cout << "excess: " << excess.note << "\n";
            }
        } else if (*spectral) {
            const auto g = spx::from_graph6(spec_g6);
            auto result = spx::spectral_radius(g, tol);
            if (spec_exact) spx::certify(g, result, tol);
            if (json) {
                print_json(spx::to_json(result));
            } else {
                std::cout.precision(12);
                std::cout << "lambda   " << result.lambda << (result.exact ? "  (exact)" : "") << "\n";
                std::cout << "residual " << result.residual << "\n";
                std::cout << "iters    " << result.iters << "\n";
                std::cout << "x       ";
                for (double v : result.x) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (*secular) {
            const auto parts = parse_parts(sec_parts);
            const double lambda = spx::secular_lambda(parts, tol);
            const auto poly = spx::multipartite_char_poly(parts);
            if (json) {
                spx::Json coeffs = spx::Json::array();
                for (const auto& c : poly.coeffs) coeffs.push_back(c.str());
                print_json(spx::Json{{"parts", parts}, {"lambda", lambda}, {"char_poly", poly.to_string()},
                                     {"coeffs", coeffs}});
            } else {
                std::cout.precision(12);
                std::cout << "lambda    " << lambda << "\n";
                std::cout << "char_poly " << poly.to_string() << "\n";
            }
        } else if (*turan) {
            const auto parts = spx::turan_parts(tur_n, tur_r);
            const auto edges = spx::turan_edges(tur_n, tur_r);
            spx::TuranEigvec vec;
            if (tur_r >= 2) vec = spx::turan_eigvec_closed(tur_n, tur_r);
            if (json) {
                print_json(spx::Json{{"n", tur_n},
                                     {"r", tur_r},
                                     {"parts", parts},
                                     {"edges", edges},
                                     {"lambda", vec.lambda},
                                     {"k", vec.k},
                                     {"y1", vec.y1},
                                     {"y2", vec.y2}});
            } else {
                std::cout.precision(12);
                std::cout << "edges  " << edges << "\n";
                std::cout << "lambda " << vec.lambda << "\n";
                std::cout << "y1     " << vec.y1 << "\n";
                std::cout << "y2     " << vec.y2 << "\n";
            }
        } else if (*diagnose) {
            const auto g = spx::from_graph6(diag_g6);
            const auto spec = spx::parse_forbidden(diag_forbid);
            const auto report = spx::lemma_report(g, spec, diag_a, tol);
            const auto wl = spx::wl_classify(g, report.partition, theta, epsilon);
            if (json) {
                print_json(spx::Json{{"lemma_report", spx::to_json(report)}, {"wl", spx::to_json(wl)}});
            } else {
                std::cout << spx::lemma_text(report);
                std::cout << "W = " << spx::Json(spx::vertex_list(wl.w)).dump() << "  L = "
                          << spx::Json(spx::vertex_list(wl.l)).dump()
                          << "  W subset L: " << (wl.w_subset_l ? "yes" : "no") << "\n";
            }
        }
    } catch (const spx::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const spx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case spx::ErrorKind::unsupported_size: return 4;
            case spx::ErrorKind::invalid_spec: return 2;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
