#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "strucres/sfm.hpp"
#include "strucres/system.hpp"

// Verifiers for feedback-link-failure resilience: a pair (system, feedback
// pattern) is gamma-resilient when the closed loop keeps admitting arbitrary
// pole placement (no structurally fixed modes) after the removal of any set
// of at most gamma feedback links.
//
// verify_exhaustive is the brute-force baseline. The single-failure,
// double-failure and general recursive verifiers avoid the combinatorial
// sweep over matching tests by probing only the feedback edges that a
// marked-edge-minimizing perfect matching actually uses; they apply to
// systems whose state digraph is irreducible (one strongly connected block)
// or structurally cyclic (disjoint-cycle-coverable states).

namespace strucres {

enum class Method { Gamma1, Gamma2, Recursive, CyclicFast, Exhaustive };

const char* method_name(Method method);

struct ResilienceVerdict {
    bool resilient = false;
    // A confirmed failing removal set when one is known; absent when the
    // link-count argument alone decides or the intact pattern already fails.
    std::optional<RemovalSet> witness;
    int gamma = 0;
    long matching_calls = 0;
    Method method = Method::Exhaustive;
};

class VerifierError : public std::runtime_error {
  public:
    enum class Code { NotIrreducible, NoBaseMatching, NotCyclic };

    VerifierError(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Code code() const { return code_; }

  private:
    Code code_;
};

// Checks every removal set of size exactly min(gamma, |feedback stars|);
// removing more links never helps, so this decides resilience for all sets
// of size at most gamma. Witness: lexicographically smallest failing set.
ResilienceVerdict verify_exhaustive(const StructuredSystem& sys,
                                    const FeedbackPattern& k, int gamma);

// Single-failure verifier. Finds a perfect matching using the fewest
// feedback edges and retests only those; resilience additionally needs two
// feedback links that an intact input/output chain can actually use.
ResilienceVerdict verify_gamma1(const StructuredSystem& sys,
                                const FeedbackPattern& k);

// Double-failure verifier: pairs within the base matching's feedback edges,
// then each such edge combined with a single-failure run on the reduced
// graph with the remaining feedback edges marked.
ResilienceVerdict verify_gamma2(const StructuredSystem& sys,
                                const FeedbackPattern& k);

// General verifier for gamma >= 1, recursing over smaller budgets.
// Matches verify_gamma1/verify_gamma2 on budgets 1 and 2.
ResilienceVerdict verify_recursive(const StructuredSystem& sys,
                                   const FeedbackPattern& k, int gamma);

enum class FastVerdict { Resilient, NotResilient, Inconclusive };

struct CyclicFastReport {
    FastVerdict verdict = FastVerdict::Inconclusive;
    std::optional<RemovalSet> witness;
    int gamma = 0;
    long matching_calls = 0;
};

// Screening verifier for structurally cyclic systems. Sound in both decided
// directions; returns Inconclusive when neither filter applies, in which
// case the caller escalates to an exact verifier.
//  - Not resilient when some state's component holds at most gamma feedback
//    edges, or when knocking out one weak state's usable feedback edges is
//    confirmed to strand it.
//  - Resilient when every state has at least gamma+1 feedback edges whose
//    input reaches it and whose output it reaches without feedback edges.
CyclicFastReport verify_cyclic_fast(const StructuredSystem& sys,
                                    const FeedbackPattern& k, int gamma);

// Routes to the cheapest verifier the system shape admits: structurally
// cyclic systems go through the screening filters first, irreducible systems
// use the budget-specialized verifiers, everything else falls back to the
// exhaustive sweep. matching_calls accumulates across an escalation.
ResilienceVerdict verify_auto(const StructuredSystem& sys,
                              const FeedbackPattern& k, int gamma);

// Feedback links (i,j) whose input column in B and output row in C are both
// nonempty; in an irreducible system exactly these links can satisfy the
// fixed-mode connectivity condition.
std::vector<Coord> effective_feedback_links(const StructuredSystem& sys,
                                            const FeedbackPattern& k);

}  // namespace strucres
