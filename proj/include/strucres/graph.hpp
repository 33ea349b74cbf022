#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

// Deterministic graph primitives: directed graphs with strongly connected
// component decomposition, and bipartite graphs with maximum matching,
// perfect matching tests and marked-edge-minimizing perfect matchings.
//
// All operations are deterministic for a fixed input: iteration follows
// ascending vertex/edge order and ties are broken lexicographically.

namespace strucres {

using Edge = std::pair<int, int>;

// Directed graph over vertices 0..vertex_count-1.
// edges is kept sorted and duplicate-free; labels are opaque caller tags.
struct Digraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    // Optional per-vertex tag (same length as vertex_count, or empty).
    std::vector<int> vertex_labels;
    // Optional per-edge tag (same length as edges, or empty).
    std::vector<int> edge_labels;
};

// Validates ranges, sorts edges (carrying labels along), rejects duplicates.
Digraph make_digraph(int vertex_count, std::vector<Edge> edges,
                     std::vector<int> vertex_labels = {},
                     std::vector<int> edge_labels = {});

// Strongly connected components of g.
// Each block is sorted ascending; blocks are ordered by smallest contained
// vertex. Every vertex appears in exactly one block.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

// Component id per vertex, consistent with the block order above.
std::vector<int> scc_component_ids(const Digraph& g);

// Bipartite graph with left vertices 0..left_count-1 and right vertices
// 0..right_count-1. edges are (left,right) pairs, sorted and duplicate-free.
// edge_kinds is an optional parallel tag vector (same length as edges).
struct Bipartite {
    int left_count = 0;
    int right_count = 0;
    std::vector<Edge> edges;
    std::vector<int> edge_kinds;
};

Bipartite make_bipartite(int left_count, int right_count,
                         std::vector<Edge> edges,
                         std::vector<int> edge_kinds = {});

// Returns b with the given (left,right) edges removed; kinds follow.
Bipartite remove_bipartite_edges(const Bipartite& b,
                                 const std::vector<Edge>& drop);

// A matching as a sorted list of disjoint (left,right) pairs.
struct Matching {
    std::vector<Edge> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

// Maximum-cardinality matching (Hopcroft-Karp). Deterministic for a fixed
// input: adjacency is scanned in ascending right-vertex order.
Matching max_matching(const Bipartite& b);

// True iff a matching saturating every left vertex exists.
// Throws std::invalid_argument if left_count > right_count.
bool has_perfect_matching(const Bipartite& b);

// Perfect matching (saturating the left side) using the minimum number of
// edges from `marked`; std::nullopt when no perfect matching exists.
// Among minimum-cost perfect matchings, returns the one whose sorted pair
// list is lexicographically smallest.
std::optional<Matching> min_marked_perfect_matching(
    const Bipartite& b, const std::set<Edge>& marked);

}  // namespace strucres
