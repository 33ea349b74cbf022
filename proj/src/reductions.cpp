#include "strucres/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace strucres {

BlockerInstance make_blocker_instance(Bipartite g, int gamma) {
    if (gamma < 0) throw std::invalid_argument("blocker: negative budget");
    if (g.left_count < 1)
        throw std::invalid_argument("blocker: empty left side");
    if (g.left_count > g.right_count)
        throw std::invalid_argument("blocker: left side larger than right side");
    if (!has_perfect_matching(g))
        throw std::invalid_argument("blocker: graph has no perfect matching");
    return BlockerInstance{std::move(g), gamma};
}

bool brute_force_blocker(const BlockerInstance& inst) {
    const int target = inst.g.left_count;
    const auto& edges = inst.g.edges;
    const int total = static_cast<int>(edges.size());
    const int take = std::min(inst.gamma, total);
    if (take == 0) return false;  // the perfect matching is intact

    std::vector<int> idx(take);
    for (int i = 0; i < take; ++i) idx[i] = i;
    while (true) {
        std::vector<Edge> removed;
        removed.reserve(take);
        for (int i : idx) removed.push_back(edges[i]);
        if (max_matching(remove_bipartite_edges(inst.g, removed)).size() < target)
            return true;
        int pos = take - 1;
        while (pos >= 0 && idx[pos] == total - take + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
}

std::pair<StructuredSystem, FeedbackPattern> reduce_blocker_to_verification(
    const BlockerInstance& inst) {
    const int r = inst.g.left_count;
    const int s = inst.g.right_count;
    if (r > s)
        throw std::invalid_argument("reduction: left side larger than right side");

    const int n = s + 2;
    // State pattern: full row 1 and full column 1, plus a block tying states
    // 2..s-r+1 to states 2..s+1 (0-indexed); the row/column hub makes the
    // state digraph irreducible.
    std::vector<Coord> a_stars;
    for (int j = 0; j < n; ++j) a_stars.push_back({1, j});
    for (int i = 0; i < n; ++i)
        if (i != 1) a_stars.push_back({i, 1});
    for (int i = 2; i <= s - r + 1; ++i)
        for (int j = 2; j <= s + 1; ++j) a_stars.push_back({i, j});

    // Inputs drive the last r states; outputs sense states 2..s+1.
    std::vector<Coord> b_stars;
    for (int i = s - r + 2; i <= s + 1; ++i)
        for (int j = 0; j < s; ++j) b_stars.push_back({i, j});
    std::vector<Coord> c_stars;
    for (int i = 0; i < r; ++i)
        for (int j = 2; j <= s + 1; ++j) c_stars.push_back({i, j});

    // K(i,j) = star iff (v_j, vt_i) is an edge of g.
    std::vector<Coord> k_stars;
    for (const auto& [v, vt] : inst.g.edges) k_stars.push_back({vt, v});

    return {make_system(n, s, r, std::move(a_stars), std::move(b_stars),
                        std::move(c_stars)),
            make_feedback(s, r, std::move(k_stars))};
}

StructuredSystem reduce_msmc_to_design(
    int universe_size, const std::vector<std::vector<int>>& sets) {
    if (universe_size < 1)
        throw std::invalid_argument("reduction: empty universe");
    if (sets.empty()) throw std::invalid_argument("reduction: no sets");
    std::vector<char> covered(universe_size, 0);
    for (const auto& s : sets) {
        for (int e : s) {
            if (e < 0 || e >= universe_size)
                throw std::invalid_argument("reduction: element out of range");
            covered[e] = 1;
        }
    }
    if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c; }))
        throw std::invalid_argument("reduction: sets do not cover the universe");

    std::vector<Coord> a_stars;
    for (int i = 0; i < universe_size; ++i) a_stars.push_back({i, i});
    std::vector<Coord> b_stars;
    for (int i = 0; i < universe_size; ++i) b_stars.push_back({i, 0});
    std::vector<Coord> c_stars;
    for (size_t i = 0; i < sets.size(); ++i) {
        auto sorted = sets[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("reduction: duplicate element in set");
        for (int e : sorted) c_stars.push_back({static_cast<int>(i), e});
    }
    return make_system(universe_size, 1, static_cast<int>(sets.size()),
                       std::move(a_stars), std::move(b_stars),
                       std::move(c_stars));
}

}  // namespace strucres
