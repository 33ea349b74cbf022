#pragma once

#include <utility>
#include <vector>

#include "strucres/graph.hpp"

// Structured-system model: zero/star sparsity patterns for the state,
// input, output and feedback matrices, and the derived graphs used by the
// fixed-mode and resilience machinery.
//
// Conventions (everywhere in this library):
//  - coordinates are 0-indexed (row, column) pairs;
//  - a star at A(i,j) means state j feeds state i, i.e. a digraph edge j->i;
//  - combined vertex numbering is states 0..n-1, inputs n..n+m-1,
//    outputs n+m..n+m+p-1, in both the closed-loop digraph and on each side
//    of the system bipartite graph.

namespace strucres {

using Coord = std::pair<int, int>;

// Zero/star pattern of a rows x cols matrix; stars sorted, duplicate-free.
struct SparsityPattern {
    int rows = 0;
    int cols = 0;
    std::vector<Coord> stars;

    int star_count() const { return static_cast<int>(stars.size()); }
    bool has(int r, int c) const;
};

SparsityPattern make_pattern(int rows, int cols, std::vector<Coord> stars);

// State/input/output patterns: A is n x n, B is n x m, C is p x n.
struct StructuredSystem {
    SparsityPattern A;
    SparsityPattern B;
    SparsityPattern C;

    int n() const { return A.rows; }
    int m() const { return B.cols; }
    int p() const { return C.rows; }
};

StructuredSystem make_system(int n, int m, int p, std::vector<Coord> a_stars,
                             std::vector<Coord> b_stars,
                             std::vector<Coord> c_stars);

// Feedback pattern: K is m x p; a star at K(i,j) closes the loop from
// output j to input i.
struct FeedbackPattern {
    SparsityPattern K;
};

FeedbackPattern make_feedback(int m, int p, std::vector<Coord> k_stars);

// A set of feedback coordinates to knock out, sorted and duplicate-free.
struct RemovalSet {
    std::vector<Coord> links;

    int size() const { return static_cast<int>(links.size()); }
};

RemovalSet make_removal_set(std::vector<Coord> links);

// k with the given links removed. Every link must be a star of k.
FeedbackPattern remove_links(const FeedbackPattern& k, const RemovalSet& removal);

// Vertex roles used as labels in the derived graphs.
enum class VertexRole : int { State = 0, Input = 1, Output = 2 };

// Edge classes used as labels in the derived graphs.
enum class EdgeClass : int {
    StateState = 0,   // from A
    InputState = 1,   // from B
    StateOutput = 2,  // from C
    OutputInput = 3,  // from K
    InputIdentity = 4,
    OutputIdentity = 5,
};

// Digraph over the n states only; edge j->i per star A(i,j).
Digraph build_state_digraph(const StructuredSystem& sys);

// Digraph over states, inputs and outputs with edges from A, B, C and K,
// labeled by EdgeClass and VertexRole.
Digraph build_closed_loop_digraph(const StructuredSystem& sys,
                                  const FeedbackPattern& k);

// System bipartite graph. Left and right each hold n+m+p vertices in the
// combined numbering. Edge classes:
//   A(i,j) -> (x'_i, x_j)        B(i,j) -> (x'_i, u_j)
//   C(i,j) -> (y'_i, x_j)        K(i,j) -> (u'_i, y_j)
// plus identity edges (u'_i, u_i) and (y'_i, y_i).
Bipartite build_system_bipartite(const StructuredSystem& sys,
                                 const FeedbackPattern& k);

// True iff the state digraph is a single strongly connected component
// spanning all n states.
bool is_irreducible(const StructuredSystem& sys);

// True iff the states can be covered by vertex-disjoint cycles of the state
// digraph, i.e. the state-only bipartite pattern of A has a perfect matching.
bool is_structurally_cyclic(const StructuredSystem& sys);

// Bipartite edge for feedback coordinate (i,j) in the combined numbering.
Edge feedback_bipartite_edge(const StructuredSystem& sys, int i, int j);

// Inverse of feedback_bipartite_edge.
Coord feedback_coord_of_bipartite_edge(const StructuredSystem& sys, const Edge& e);

// Feedback-free reachability over the open-loop digraph (edges from A, B, C
// only). from_input[i][x] holds iff input i reaches state x; to_output[j][x]
// holds iff state x reaches output j.
struct PathCones {
    std::vector<std::vector<char>> from_input;
    std::vector<std::vector<char>> to_output;
};

PathCones open_loop_cones(const StructuredSystem& sys);

}  // namespace strucres
