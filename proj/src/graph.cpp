#include "strucres/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace strucres {

namespace {

// Sorts parallel (items, labels) by items and rejects duplicate items.
void sort_edges_with_labels(std::vector<Edge>& edges, std::vector<int>& labels,
                            const char* what) {
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return edges[a] < edges[b]; });
    std::vector<Edge> se;
    std::vector<int> sl;
    se.reserve(edges.size());
    sl.reserve(labels.size());
    for (int idx : order) {
        se.push_back(edges[idx]);
        if (!labels.empty()) sl.push_back(labels[idx]);
    }
    for (size_t i = 1; i < se.size(); ++i) {
        if (se[i] == se[i - 1])
            throw std::invalid_argument(std::string(what) + ": duplicate edge");
    }
    edges = std::move(se);
    labels = std::move(sl);
}

std::vector<std::vector<int>> out_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const auto& [from, to] : g.edges) adj[from].push_back(to);
    return adj;  // already ascending: edges are sorted
}

}  // namespace

Digraph make_digraph(int vertex_count, std::vector<Edge> edges,
                     std::vector<int> vertex_labels,
                     std::vector<int> edge_labels) {
    if (vertex_count < 0) throw std::invalid_argument("digraph: negative vertex count");
    if (!vertex_labels.empty() &&
        vertex_labels.size() != static_cast<size_t>(vertex_count))
        throw std::invalid_argument("digraph: vertex label length mismatch");
    if (!edge_labels.empty() && edge_labels.size() != edges.size())
        throw std::invalid_argument("digraph: edge label length mismatch");
    for (const auto& [from, to] : edges) {
        if (from < 0 || from >= vertex_count || to < 0 || to >= vertex_count)
            throw std::invalid_argument("digraph: edge endpoint out of range");
    }
    sort_edges_with_labels(edges, edge_labels, "digraph");
    return Digraph{vertex_count, std::move(edges), std::move(vertex_labels),
                   std::move(edge_labels)};
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
    const int n = g.vertex_count;
    const auto adj = out_adjacency(g);

    // Iterative Tarjan; vertices entered in ascending order.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> blocks;
    int next_index = 0;

    struct Frame {
        int v;
        size_t child;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            const int v = fr.v;
            if (fr.child < adj[v].size()) {
                const int w = adj[v][fr.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<int> block;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        block.push_back(w);
                    } while (w != v);
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    const int parent = frames.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

std::vector<int> scc_component_ids(const Digraph& g) {
    const auto blocks = strongly_connected_components(g);
    std::vector<int> ids(g.vertex_count, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) ids[v] = static_cast<int>(b);
    return ids;
}

Bipartite make_bipartite(int left_count, int right_count,
                         std::vector<Edge> edges, std::vector<int> edge_kinds) {
    if (left_count < 0 || right_count < 0)
        throw std::invalid_argument("bipartite: negative side size");
    if (!edge_kinds.empty() && edge_kinds.size() != edges.size())
        throw std::invalid_argument("bipartite: edge kind length mismatch");
    for (const auto& [l, r] : edges) {
        if (l < 0 || l >= left_count || r < 0 || r >= right_count)
            throw std::invalid_argument("bipartite: edge endpoint out of range");
    }
    sort_edges_with_labels(edges, edge_kinds, "bipartite");
    return Bipartite{left_count, right_count, std::move(edges),
                     std::move(edge_kinds)};
}

Bipartite remove_bipartite_edges(const Bipartite& b,
                                 const std::vector<Edge>& drop) {
    const std::set<Edge> gone(drop.begin(), drop.end());
    std::vector<Edge> kept;
    std::vector<int> kinds;
    kept.reserve(b.edges.size());
    for (size_t i = 0; i < b.edges.size(); ++i) {
        if (gone.count(b.edges[i])) continue;
        kept.push_back(b.edges[i]);
        if (!b.edge_kinds.empty()) kinds.push_back(b.edge_kinds[i]);
    }
    return Bipartite{b.left_count, b.right_count, std::move(kept),
                     std::move(kinds)};
}

namespace {

std::vector<std::vector<int>> left_adjacency(const Bipartite& b) {
    std::vector<std::vector<int>> adj(b.left_count);
    for (const auto& [l, r] : b.edges) adj[l].push_back(r);
    return adj;  // ascending per left vertex: edges are sorted
}

constexpr int kFree = -1;

// Hopcroft-Karp on adjacency lists; returns matchL/matchR.
struct HkResult {
    std::vector<int> match_left;
    std::vector<int> match_right;
    int size = 0;
};

HkResult hopcroft_karp(const std::vector<std::vector<int>>& adj, int left_count,
                       int right_count) {
    std::vector<int> match_left(left_count, kFree), match_right(right_count, kFree);
    std::vector<int> dist(left_count, 0);
    const int inf = std::numeric_limits<int>::max();
    int size = 0;

    auto bfs = [&]() {
        std::deque<int> q;
        for (int l = 0; l < left_count; ++l) {
            if (match_left[l] == kFree) {
                dist[l] = 0;
                q.push_back(l);
            } else {
                dist[l] = inf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            const int l = q.front();
            q.pop_front();
            for (int r : adj[l]) {
                const int l2 = match_right[r];
                if (l2 == kFree) {
                    found = true;
                } else if (dist[l2] == inf) {
                    dist[l2] = dist[l] + 1;
                    q.push_back(l2);
                }
            }
        }
        return found;
    };

    std::vector<size_t> it(left_count);
    // DFS over the layered graph; recursion replaced by an explicit stack.
    auto dfs = [&](int root) {
        std::vector<int> path{root};
        while (!path.empty()) {
            const int l = path.back();
            bool advanced = false;
            while (it[l] < adj[l].size()) {
                const int r = adj[l][it[l]++];
                const int l2 = match_right[r];
                if (l2 == kFree) {
                    // Augment along the path.
                    int rr = r;
                    for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
                        const int li = path[i];
                        const int prev = match_left[li];
                        match_left[li] = rr;
                        match_right[rr] = li;
                        rr = prev;
                    }
                    return true;
                }
                if (dist[l2] == dist[l] + 1) {
                    path.push_back(l2);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                dist[l] = inf;
                path.pop_back();
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int l = 0; l < left_count; ++l)
            if (match_left[l] == kFree && dfs(l)) ++size;
    }
    return HkResult{std::move(match_left), std::move(match_right), size};
}

}  // namespace

Matching max_matching(const Bipartite& b) {
    const auto adj = left_adjacency(b);
    const auto hk = hopcroft_karp(adj, b.left_count, b.right_count);
    Matching m;
    for (int l = 0; l < b.left_count; ++l)
        if (hk.match_left[l] != kFree) m.pairs.emplace_back(l, hk.match_left[l]);
    return m;
}

bool has_perfect_matching(const Bipartite& b) {
    if (b.left_count > b.right_count)
        throw std::invalid_argument(
            "has_perfect_matching: left side larger than right side");
    return max_matching(b).size() == b.left_count;
}

namespace {

// Minimum total cost of a matching saturating all alive left vertices, where
// an edge costs 1 if marked and 0 otherwise; nullopt when no such matching
// exists. Successive shortest augmenting paths; the base matching over
// zero-cost edges is cost-minimal at its cardinality, and each augmentation
// preserves extremality.
std::optional<int> min_cost_saturating_cost(
    const std::vector<std::vector<int>>& adj,
    const std::vector<std::vector<int>>& cost, int left_count, int right_count,
    const std::vector<char>& left_alive, const std::vector<char>& right_alive) {
    std::vector<int> match_left(left_count, kFree), match_right(right_count, kFree);

    // Base: maximum matching restricted to zero-cost edges.
    std::vector<std::vector<int>> zero_adj(left_count);
    for (int l = 0; l < left_count; ++l) {
        if (!left_alive[l]) continue;
        for (size_t k = 0; k < adj[l].size(); ++k)
            if (cost[l][k] == 0 && right_alive[adj[l][k]])
                zero_adj[l].push_back(adj[l][k]);
    }
    {
        const auto hk = hopcroft_karp(zero_adj, left_count, right_count);
        match_left = hk.match_left;
        match_right = hk.match_right;
        for (int l = 0; l < left_count; ++l)
            if (!left_alive[l]) match_left[l] = kFree;  // hk never matches them
    }

    const int inf = std::numeric_limits<int>::max();
    int total = 0;
    for (int start = 0; start < left_count; ++start) {
        if (!left_alive[start] || match_left[start] != kFree) continue;
        // Bellman-Ford over the residual graph from `start`; negative arcs
        // (unmatching a marked edge) exist, negative cycles do not.
        std::vector<int> dist_l(left_count, inf), dist_r(right_count, inf);
        std::vector<int> pred_r(right_count, kFree);  // left vertex reaching r
        dist_l[start] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int l = 0; l < left_count; ++l) {
                if (!left_alive[l] || dist_l[l] == inf) continue;
                for (size_t k = 0; k < adj[l].size(); ++k) {
                    const int r = adj[l][k];
                    if (!right_alive[r] || match_left[l] == r) continue;
                    const int nd = dist_l[l] + cost[l][k];
                    if (nd < dist_r[r]) {
                        dist_r[r] = nd;
                        pred_r[r] = l;
                        changed = true;
                        const int l2 = match_right[r];
                        if (l2 != kFree) {
                            // Matched arc back to the left side, cost negated.
                            int back = 0;
                            for (size_t k2 = 0; k2 < adj[l2].size(); ++k2)
                                if (adj[l2][k2] == r) back = cost[l2][k2];
                            if (nd - back < dist_l[l2]) dist_l[l2] = nd - back;
                        }
                    }
                }
            }
        }
        int best_r = kFree, best = inf;
        for (int r = 0; r < right_count; ++r) {
            if (!right_alive[r] || match_right[r] != kFree) continue;
            if (dist_r[r] < best) {
                best = dist_r[r];
                best_r = r;
            }
        }
        if (best_r == kFree) return std::nullopt;
        total += best;
        // Walk predecessors back to `start`, flipping the path.
        int r = best_r;
        while (true) {
            const int l = pred_r[r];
            const int prev = match_left[l];
            match_left[l] = r;
            match_right[r] = l;
            if (l == start) break;
            r = prev;
        }
    }
    return total;
}

}  // namespace

std::optional<Matching> min_marked_perfect_matching(const Bipartite& b,
                                                    const std::set<Edge>& marked) {
    if (b.left_count > b.right_count) return std::nullopt;
    std::vector<std::vector<int>> adj(b.left_count), cost(b.left_count);
    for (const auto& [l, r] : b.edges) {
        adj[l].push_back(r);
        cost[l].push_back(marked.count({l, r}) ? 1 : 0);
    }
    std::vector<char> left_alive(b.left_count, 1), right_alive(b.right_count, 1);
    const auto total =
        min_cost_saturating_cost(adj, cost, b.left_count, b.right_count,
                                 left_alive, right_alive);
    if (!total) return std::nullopt;

    // Fix partners left to right, smallest right first, keeping the optimum
    // attainable; yields the lexicographically smallest minimum-cost matching.
    Matching result;
    int budget = *total;
    for (int l = 0; l < b.left_count; ++l) {
        left_alive[l] = 0;
        bool fixed = false;
        for (size_t k = 0; k < adj[l].size(); ++k) {
            const int r = adj[l][k];
            if (!right_alive[r]) continue;
            right_alive[r] = 0;
            const auto rest =
                min_cost_saturating_cost(adj, cost, b.left_count, b.right_count,
                                         left_alive, right_alive);
            if (rest && *rest + cost[l][k] == budget) {
                result.pairs.emplace_back(l, r);
                budget -= cost[l][k];
                fixed = true;
                break;
            }
            right_alive[r] = 1;
        }
        if (!fixed) return std::nullopt;  // unreachable once total is known
    }
    return result;
}

}  // namespace strucres
