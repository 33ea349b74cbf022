#pragma once

#include <optional>
#include <vector>

#include "strucres/system.hpp"

// Structurally fixed mode detection. A closed-loop pattern admits arbitrary
// pole placement (has no structurally fixed modes) iff both hold:
//  (a) every state lies in a strongly connected component of the closed-loop
//      digraph that contains a feedback edge, and
//  (b) the system bipartite graph has a perfect matching.

namespace strucres {

// Certificate that the system bipartite graph has no perfect matching:
// a right vertex set whose combined neighborhood is strictly smaller.
struct HallWitness {
    std::vector<int> rights;
    std::vector<int> lefts;
};

struct SfmReport {
    bool no_sfm = false;
    bool condition_a = false;
    bool condition_b = false;
    // States (0..n-1) whose component holds no intact feedback edge.
    std::vector<int> violating_states_a;
    std::optional<HallWitness> hall_witness_b;
};

// Condition (a): returns the satisfied flag plus the violating states.
// A feedback edge counts for a component only when both endpoints lie in it.
std::pair<bool, std::vector<int>> check_condition_a(const StructuredSystem& sys,
                                                    const FeedbackPattern& k);

// Condition (b): perfect matching of the system bipartite graph; on failure
// produces a Hall witness via alternating reachability from the smallest
// unmatched right vertex.
std::pair<bool, std::optional<HallWitness>> check_condition_b(
    const StructuredSystem& sys, const FeedbackPattern& k);

// Both conditions, assembled into one report.
SfmReport has_no_sfm(const StructuredSystem& sys, const FeedbackPattern& k);

// Hall witness extraction for an arbitrary bipartite graph that has no
// matching saturating the right side. Exposed for reuse and testing.
HallWitness hall_witness_for_unsaturated_right(const Bipartite& b);

}  // namespace strucres
