#include "oracles.hpp"

#include <algorithm>

namespace strucres {
namespace testing {

std::vector<int> scc_ids_oracle(const Digraph& g) {
    const int n = g.vertex_count;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    for (const auto& [from, to] : g.edges) reach[from][to] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = 1;

    std::vector<int> ids(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (ids[v] != -1) continue;
        for (int w = v; w < n; ++w)
            if (reach[v][w] && reach[w][v]) ids[w] = next;
        ++next;
    }
    return ids;
}

namespace {

int max_matching_from(const Bipartite& b,
                      const std::vector<std::vector<int>>& adj, int left,
                      std::vector<char>& used_right) {
    if (left == b.left_count) return 0;
    // Either leave this left vertex unmatched...
    int best = max_matching_from(b, adj, left + 1, used_right);
    // ...or match it to any free neighbour.
    for (int r : adj[left]) {
        if (used_right[r]) continue;
        used_right[r] = 1;
        best = std::max(best, 1 + max_matching_from(b, adj, left + 1, used_right));
        used_right[r] = 0;
    }
    return best;
}

std::vector<std::vector<int>> adjacency(const Bipartite& b) {
    std::vector<std::vector<int>> adj(b.left_count);
    for (const auto& [l, r] : b.edges) adj[l].push_back(r);
    return adj;
}

void enumerate_perfect(const Bipartite& b,
                       const std::vector<std::vector<int>>& adj,
                       const std::set<Edge>& marked, int left,
                       std::vector<char>& used_right, std::vector<Edge>& pairs,
                       int cost, std::optional<Matching>& best, int& best_cost) {
    if (left == b.left_count) {
        if (!best || cost < best_cost ||
            (cost == best_cost && pairs < best->pairs)) {
            best = Matching{pairs};
            best_cost = cost;
        }
        return;
    }
    for (int r : adj[left]) {
        if (used_right[r]) continue;
        used_right[r] = 1;
        pairs.push_back({left, r});
        enumerate_perfect(b, adj, marked, left + 1, used_right, pairs,
                          cost + (marked.count({left, r}) ? 1 : 0), best,
                          best_cost);
        pairs.pop_back();
        used_right[r] = 0;
    }
}

}  // namespace

int max_matching_size_oracle(const Bipartite& b) {
    std::vector<char> used_right(b.right_count, 0);
    return max_matching_from(b, adjacency(b), 0, used_right);
}

std::optional<Matching> min_marked_oracle(const Bipartite& b,
                                          const std::set<Edge>& marked) {
    std::vector<char> used_right(b.right_count, 0);
    std::vector<Edge> pairs;
    std::optional<Matching> best;
    int best_cost = 0;
    enumerate_perfect(b, adjacency(b), marked, 0, used_right, pairs, 0, best,
                      best_cost);
    return best;
}

std::optional<int> msmc_optimum_oracle(const MsmcInstance& inst) {
    const int r = static_cast<int>(inst.sets.size());
    std::optional<int> best;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (best && __builtin_popcount(mask) >= *best) continue;
        std::vector<int> covered(inst.universe_size, 0);
        for (int s = 0; s < r; ++s)
            if (mask & (1u << s))
                for (int e : inst.sets[s]) ++covered[e];
        bool ok = true;
        for (int e = 0; e < inst.universe_size; ++e)
            if (covered[e] < inst.demand) { ok = false; break; }
        if (ok) best = __builtin_popcount(mask);
    }
    return best;
}

}  // namespace testing
}  // namespace strucres
