#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spx/graph.hpp"

namespace spx {

/// Complete isomorphism invariant: the graph6 string of the canonically
/// relabeled graph. Two graphs are isomorphic iff their bytes are equal.
struct CanonicalForm {
    std::string bytes;
    /// |Aut(G)|, absent when it does not fit in 64 bits.
    std::optional<std::uint64_t> aut_size;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

struct CanonicalLabeling {
    /// label[v] is the canonical position of vertex v.
    std::vector<int> label;
    CanonicalForm form;
};

/// Equitable partition refinement with individualization, keeping the leaf
/// whose relabeled upper triangle (graph6 bit order) is lexicographically
/// smallest. Subtrees equivalent under automorphisms already discovered
/// are skipped.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// The canonical representative of g's isomorphism class.
Graph canonical_graph(const Graph& g);

}  // namespace spx
