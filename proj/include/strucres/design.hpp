#pragma once

#include <optional>
#include <vector>

#include "strucres/system.hpp"

// Design of sparsest failure-resilient feedback patterns for structurally
// cyclic systems, restricted to back-edge feedback: a link from output j to
// input i is a candidate only when input i can already reach output j
// through the open loop.
//
// The problem reduces to minimum set multi-cover: one candidate set per
// feasible back-edge, holding the states lying on some open-loop path from
// its input to its output; demanding gamma+1 covers per state guarantees
// every state keeps a private feedback cycle under any gamma link failures.

namespace strucres {

// Set multi-cover instance over universe {0..universe_size-1}. Every element
// must be demanded `demand` times; each set may be chosen at most once.
struct MsmcInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
    int demand = 1;
    // Optional origin of each set as a feedback coordinate (input, output).
    std::vector<Coord> set_provenance;
};

struct DesignResult {
    FeedbackPattern k;
    std::vector<int> chosen_sets;  // indices in pick order
    int size = 0;                  // number of feedback stars
};

// Candidate back-edges (i,j), input-major order.
std::vector<Coord> feasible_back_edges(const StructuredSystem& sys);

// Builds the multi-cover instance with demand gamma+1.
// Throws VerifierError{NotCyclic} when the system is not structurally cyclic.
MsmcInstance reduce_design_to_msmc(const StructuredSystem& sys, int gamma);

// Greedy multi-cover: repeatedly picks the set covering the most unmet
// demand (ties: smallest index). Returns chosen indices in pick order, or
// std::nullopt iff some element appears in fewer than `demand` sets.
std::optional<std::vector<int>> greedy_msmc(const MsmcInstance& inst);

// Greedy design: reduce, cover, map chosen sets back to feedback stars.
// std::nullopt when no back-edge pattern can meet the demand.
std::optional<DesignResult> design_sparsest(const StructuredSystem& sys,
                                            int gamma);

// Exact baseline: enumerates back-edge subsets by increasing cardinality
// (lexicographic within a cardinality) and returns the first subset whose
// masked variants all stay free of structurally fixed modes.
// Requires at most 20 feasible back-edges.
std::optional<DesignResult> brute_force_design(const StructuredSystem& sys,
                                               int gamma);

}  // namespace strucres
