#include "strucres/sfm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace strucres {

std::pair<bool, std::vector<int>> check_condition_a(const StructuredSystem& sys,
                                                    const FeedbackPattern& k) {
    const auto g = build_closed_loop_digraph(sys, k);
    const auto comp = scc_component_ids(g);

    std::vector<char> comp_has_feedback(g.vertex_count, 0);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edge_labels[e] != static_cast<int>(EdgeClass::OutputInput)) continue;
        const auto& [from, to] = g.edges[e];
        if (comp[from] == comp[to]) comp_has_feedback[comp[from]] = 1;
    }
    std::vector<int> violating;
    for (int x = 0; x < sys.n(); ++x)
        if (!comp_has_feedback[comp[x]]) violating.push_back(x);
    return {violating.empty(), std::move(violating)};
}

HallWitness hall_witness_for_unsaturated_right(const Bipartite& b) {
    const auto m = max_matching(b);
    if (m.size() == b.right_count)
        throw std::invalid_argument("hall witness: right side is saturated");
    std::vector<int> match_right(b.right_count, -1), match_left(b.left_count, -1);
    for (const auto& [l, r] : m.pairs) {
        match_left[l] = r;
        match_right[r] = l;
    }
    std::vector<std::vector<int>> right_adj(b.right_count);
    for (const auto& [l, r] : b.edges) right_adj[r].push_back(l);

    int root = -1;
    for (int r = 0; r < b.right_count; ++r) {
        if (match_right[r] == -1) {
            root = r;
            break;
        }
    }
    // Alternating reachability: right -> left over any edge, left -> right
    // over its matched edge. Every reachable left is matched (otherwise the
    // matching would not be maximum), so |lefts| = |rights| - 1.
    std::vector<char> seen_r(b.right_count, 0), seen_l(b.left_count, 0);
    std::deque<int> queue{root};
    seen_r[root] = 1;
    while (!queue.empty()) {
        const int r = queue.front();
        queue.pop_front();
        for (int l : right_adj[r]) {
            if (seen_l[l]) continue;
            seen_l[l] = 1;
            const int r2 = match_left[l];
            if (r2 != -1 && !seen_r[r2]) {
                seen_r[r2] = 1;
                queue.push_back(r2);
            }
        }
    }
    HallWitness w;
    for (int r = 0; r < b.right_count; ++r)
        if (seen_r[r]) w.rights.push_back(r);
    for (int l = 0; l < b.left_count; ++l)
        if (seen_l[l]) w.lefts.push_back(l);
    return w;
}

std::pair<bool, std::optional<HallWitness>> check_condition_b(
    const StructuredSystem& sys, const FeedbackPattern& k) {
    const auto b = build_system_bipartite(sys, k);
    if (has_perfect_matching(b)) return {true, std::nullopt};
    return {false, hall_witness_for_unsaturated_right(b)};
}

SfmReport has_no_sfm(const StructuredSystem& sys, const FeedbackPattern& k) {
    SfmReport report;
    auto [a_ok, violating] = check_condition_a(sys, k);
    auto [b_ok, witness] = check_condition_b(sys, k);
    report.condition_a = a_ok;
    report.condition_b = b_ok;
    report.violating_states_a = std::move(violating);
    report.hall_witness_b = std::move(witness);
    report.no_sfm = a_ok && b_ok;
    return report;
}

}  // namespace strucres
