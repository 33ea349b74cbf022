#pragma once

#include <utility>
#include <vector>

#include "strucres/graph.hpp"
#include "strucres/system.hpp"

// Instance transformers used to cross-validate the verifiers and designers
// against independent combinatorial baselines.
//
// Blocker -> verification: a bipartite graph G with a perfect matching plus
// an edge-removal budget maps to a closed-loop verification instance whose
// gamma-resilience fails exactly when G has a matching-destroying edge set
// within budget. Multi-cover -> design: a multi-cover instance maps to a
// diagonal single-input system whose sparsest resilient back-edge patterns
// mirror minimum multi-covers.

namespace strucres {

// Bipartite graph (left side V, right side Vt) with removal budget gamma.
// G must have a matching saturating the left side.
struct BlockerInstance {
    Bipartite g;
    int gamma = 0;
};

BlockerInstance make_blocker_instance(Bipartite g, int gamma);

// True iff removing some edge set of size at most inst.gamma drops the
// maximum matching below the left side size. Monotone in the removal set,
// so subsets of size exactly min(gamma, |edges|) decide.
bool brute_force_blocker(const BlockerInstance& inst);

// Verification instance whose feedback stars mirror the edges of g:
// with r = left size and s = right size (r <= s required), the system has
// s+2 states, s inputs, r outputs, an irreducible state digraph, and
// K(i,j) = star iff (v_j, vt_i) is an edge of g.
std::pair<StructuredSystem, FeedbackPattern> reduce_blocker_to_verification(
    const BlockerInstance& inst);

// Design instance for a multi-cover problem over `universe_size` elements:
// diagonal state pattern, one all-star input column, output row i sensing
// exactly the states in sets[i]; cover demand alpha maps to gamma = alpha-1.
// Rejects an empty universe, an empty set list, and sets not covering the
// universe.
StructuredSystem reduce_msmc_to_design(int universe_size,
                                       const std::vector<std::vector<int>>& sets);

}  // namespace strucres
