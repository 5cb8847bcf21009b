#include "spx/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <thread>
#include <unordered_set>

#include "spx/canonical.hpp"
#include "spx/error.hpp"
#include "spx/graph6.hpp"

namespace spx {

namespace {

struct Node {
    Graph graph;  // canonically labeled
    std::string bytes;
};

/// Children of one parent accepted by the canonical-deletion rule.
void expand(const Node& parent, const GenerateOptions& options, std::vector<Node>& out) {
    const Graph& p = parent.graph;
    const int v = p.n();
    const int max_degree = p.max_degree();
    std::unordered_set<std::string> seen;

    for (VertexSet nbrs = 0; nbrs <= all_vertices(v); ++nbrs) {
        // The canonically last vertex always has maximum degree, so the new
        // vertex must have it too.
        const int new_degree = set_size(nbrs);
        if (new_degree >= max_degree) {
            int top = 0;
            for (int u = 0; u < v; ++u) top = std::max(top, p.degree(u) + static_cast<int>((nbrs >> u) & 1U));
            if (new_degree >= top) {
                Graph child = p.with_vertex(nbrs);
                if (!options.prune || !contains_subgraph(child, options.prune->graph, v)) {
                    CanonicalLabeling lab = canonical_labeling(child);
                    const int last = static_cast<int>(std::find(lab.label.begin(), lab.label.end(), v) - lab.label.begin());
                    const bool accepted = last == v || canonical_form(child.without_vertex(last)).bytes == parent.bytes;
                    if (accepted && seen.insert(lab.form.bytes).second) {
                        out.push_back(Node{child.relabeled(lab.label), std::move(lab.form.bytes)});
                    }
                }
            }
        }
        if (nbrs == all_vertices(v)) break;
    }
}

std::vector<Node> next_level(const std::vector<Node>& parents, const GenerateOptions& options) {
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(parents.size())));
    std::vector<std::vector<Node>> parts(static_cast<std::size_t>(jobs));
    auto work = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < parents.size(); i += static_cast<std::size_t>(jobs)) {
            expand(parents[i], options, parts[w]);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<Node> level;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(level));
    std::sort(level.begin(), level.end(), [](const Node& a, const Node& b) { return a.bytes < b.bytes; });
    return level;
}

}  // namespace

std::vector<Graph> generate(int n, const GenerateOptions& options) {
    if (n < 1 || n > kEnumerationCap) {
        throw Error(ErrorKind::unsupported_size,
                    "enumeration supports 1 <= n <= " + std::to_string(kEnumerationCap) + ", got " + std::to_string(n));
    }
    Graph single = empty_graph(1);
    std::vector<Node> level;
    if (!options.prune || !contains_subgraph(single, options.prune->graph)) {
        level.push_back(Node{single, to_graph6(single)});
    }
    for (int k = 2; k <= n && !level.empty(); ++k) level = next_level(level, options);

    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& node : level) out.push_back(std::move(node.graph));
    return out;
}

std::vector<Graph> ingest(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");

    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view text = line;
        if (line_no == 1 && text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
        if (text.empty()) continue;

        Graph g;
        try {
            g = from_graph6(text);
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        if (options.prune && contains_subgraph(g, options.prune->graph)) continue;
        if (options.dedupe && !seen.insert(canonical_form(g).bytes).second) continue;
        out.push_back(std::move(g));
    }
    if (in.bad()) throw Error(ErrorKind::io, "read failure on '" + path.string() + "'");
    return out;
}

}  // namespace spx
