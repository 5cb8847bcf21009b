#include "spx/report.hpp"

#include <cstdio>
#include <sstream>

#include "spx/graph6.hpp"

namespace spx {

namespace {

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Json graph_list(const std::vector<Graph>& graphs) {
    Json out = Json::array();
    for (const auto& g : graphs) out.push_back(to_graph6(g));
    return out;
}

}  // namespace

std::vector<int> vertex_list(VertexSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Json to_json(const ForbiddenSpec& spec) {
    return Json{{"source", spec.source}, {"graph6", to_graph6(spec.graph)}, {"chi", spec.chi}, {"r", spec.r},
                {"name", spec.name}};
}

Json to_json(const SpectralResult& result) {
    return Json{{"lambda", result.lambda},   {"x", result.x},        {"residual", result.residual},
                {"iters", result.iters},     {"exact", result.exact}, {"dominant", vertex_list(result.dominant)}};
}

Json to_json(const ExtremalReport& report) {
    Json spectral = Json::array();
    for (const auto& w : report.spectral_extremal) {
        spectral.push_back(Json{{"graph6", to_graph6(w.graph)}, {"lambda", w.lambda}, {"exact", w.exact}});
    }
    return Json{{"n", report.n},
                {"spec", to_json(report.spec)},
                {"classes", report.classes},
                {"ex", report.ex},
                {"edge_extremal", graph_list(report.edge_extremal)},
                {"lambda_star", report.lambda_star},
                {"spectral_extremal", spectral},
                {"contained", report.contained},
                {"excess", report.excess},
                {"turan_edges", report.turan_edges},
                {"reference", report.reference}};
}

Json to_json(const ExcessEstimate& estimate) {
    Json rows = Json::array();
    for (const auto& row : estimate.rows) rows.push_back(Json{{"n", row.n}, {"excess", row.excess}});
    return Json{{"rows", rows}, {"stable", estimate.stable}, {"stable_run", estimate.stable_run},
                {"note", estimate.note}};
}

Json to_json(const PartitionReport& report) {
    Json parts = Json::array();
    Json b = Json::array();
    Json c = Json::array();
    for (std::size_t i = 0; i < report.parts.size(); ++i) {
        parts.push_back(vertex_list(report.parts[i]));
        b.push_back(vertex_list(report.b_sets[i]));
        c.push_back(vertex_list(report.c_sets[i]));
    }
    return Json{{"r", report.r},
                {"parts", parts},
                {"part_sizes", report.part_sizes},
                {"cross_edges", report.cross_edges},
                {"internal_edges", report.internal_edges},
                {"B", b},
                {"C", c},
                {"e_in", report.e_in},
                {"e_out", report.e_out},
                {"balanced", report.balanced},
                {"certified", report.certified}};
}

Json to_json(const WLReport& report) {
    return Json{{"theta", report.theta},
                {"epsilon", report.epsilon},
                {"W", vertex_list(report.w)},
                {"L", vertex_list(report.l)},
                {"w_threshold", report.w_threshold},
                {"l_threshold", report.l_threshold},
                {"W_subset_L", report.w_subset_l},
                {"L_size_bound", report.l_size_bound}};
}

Json to_json(const Check& check) {
    return Json{{"check_id", check.check_id}, {"statement", check.statement}, {"holds", check.holds},
                {"lhs", check.lhs},           {"rhs", check.rhs},             {"slack", check.slack}};
}

Json to_json(const LemmaReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    return Json{{"partition", to_json(report.partition)}, {"lambda", report.spectral.lambda}, {"checks", checks}};
}

std::string containment_table(const std::vector<ExtremalReport>& reports) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%4s %8s %6s %6s %7s %14s %6s %6s %10s\n", "n", "classes", "ex", "T_edges", "excess",
                  "lambda_star", "|Ex|", "|Exsp|", "contained");
    out << line;
    for (const auto& r : reports) {
        std::snprintf(line, sizeof line, "%4d %8zu %6zu %6llu %7lld %14s %6zu %6zu %10s\n", r.n, r.classes, r.ex,
                      static_cast<unsigned long long>(r.turan_edges), static_cast<long long>(r.excess),
                      fixed(r.lambda_star, 9).c_str(), r.edge_extremal.size(), r.spectral_extremal.size(),
                      r.contained ? "true" : "false");
        out << line;
    }
    return out.str();
}

std::string extremal_text(const ExtremalReport& r) {
    std::ostringstream out;
    out << "forbidden    " << r.spec.source << " (chi=" << r.spec.chi << ", r=" << r.spec.r << ")\n";
    out << "n            " << r.n << "\n";
    out << "classes      " << r.classes << "\n";
    out << "ex           " << r.ex << "\n";
    out << "turan_edges  " << r.turan_edges << "\n";
    out << "excess       " << r.excess << "\n";
    out << "lambda_star  " << fixed(r.lambda_star, 9) << "\n";
    out << "contained    " << (r.contained ? "true" : "false") << "\n";
    out << "reference    " << r.reference << "\n";
    for (const auto& g : r.edge_extremal) out << "Ex           " << to_graph6(g) << "\n";
    for (const auto& w : r.spectral_extremal) {
        out << "Ex_sp        " << to_graph6(w.graph) << (w.exact ? "  (exact)" : "") << "\n";
    }
    return out.str();
}

std::string lemma_text(const LemmaReport& report) {
    std::ostringstream out;
    out << "partition sizes:";
    for (int s : report.partition.part_sizes) out << " " << s;
    out << "  cross=" << report.partition.cross_edges << " e_in=" << report.partition.e_in
        << " e_out=" << report.partition.e_out << (report.partition.certified ? " (exhaustive)" : " (local search)")
        << "\n";
    out << "lambda " << fixed(report.spectral.lambda, 9) << "\n";
    char line[256];
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof line, "%-24s %-6s lhs=%-12s rhs=%-12s slack=%s\n", c.check_id.c_str(),
                      c.holds ? "holds" : "FAILS", fixed(c.lhs).c_str(), fixed(c.rhs).c_str(), fixed(c.slack).c_str());
        out << line;
    }
    return out.str();
}

}  // namespace spx
