#include "strucres/system.hpp"

#include <algorithm>
#include <stdexcept>

namespace strucres {

bool SparsityPattern::has(int r, int c) const {
    return std::binary_search(stars.begin(), stars.end(), Coord{r, c});
}

SparsityPattern make_pattern(int rows, int cols, std::vector<Coord> stars) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("pattern: negative dimension");
    for (const auto& [r, c] : stars) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::invalid_argument("pattern: star out of range");
    }
    std::sort(stars.begin(), stars.end());
    if (std::adjacent_find(stars.begin(), stars.end()) != stars.end())
        throw std::invalid_argument("pattern: duplicate star");
    return SparsityPattern{rows, cols, std::move(stars)};
}

StructuredSystem make_system(int n, int m, int p, std::vector<Coord> a_stars,
                             std::vector<Coord> b_stars,
                             std::vector<Coord> c_stars) {
    if (n < 1) throw std::invalid_argument("system: need at least one state");
    if (m < 0 || p < 0) throw std::invalid_argument("system: negative dimension");
    return StructuredSystem{make_pattern(n, n, std::move(a_stars)),
                            make_pattern(n, m, std::move(b_stars)),
                            make_pattern(p, n, std::move(c_stars))};
}

FeedbackPattern make_feedback(int m, int p, std::vector<Coord> k_stars) {
    return FeedbackPattern{make_pattern(m, p, std::move(k_stars))};
}

RemovalSet make_removal_set(std::vector<Coord> links) {
    std::sort(links.begin(), links.end());
    if (std::adjacent_find(links.begin(), links.end()) != links.end())
        throw std::invalid_argument("removal set: duplicate link");
    return RemovalSet{std::move(links)};
}

FeedbackPattern remove_links(const FeedbackPattern& k, const RemovalSet& removal) {
    for (const auto& [i, j] : removal.links) {
        if (!k.K.has(i, j))
            throw std::invalid_argument("remove_links: link is not a feedback star");
    }
    std::vector<Coord> kept;
    kept.reserve(k.K.stars.size());
    for (const auto& star : k.K.stars) {
        if (!std::binary_search(removal.links.begin(), removal.links.end(), star))
            kept.push_back(star);
    }
    return FeedbackPattern{SparsityPattern{k.K.rows, k.K.cols, std::move(kept)}};
}

Digraph build_state_digraph(const StructuredSystem& sys) {
    std::vector<Edge> edges;
    edges.reserve(sys.A.stars.size());
    for (const auto& [i, j] : sys.A.stars) edges.emplace_back(j, i);
    return make_digraph(sys.n(), std::move(edges),
                        std::vector<int>(sys.n(), static_cast<int>(VertexRole::State)));
}

Digraph build_closed_loop_digraph(const StructuredSystem& sys,
                                  const FeedbackPattern& k) {
    const int n = sys.n(), m = sys.m(), p = sys.p();
    if (k.K.rows != m || k.K.cols != p)
        throw std::invalid_argument("closed loop: feedback shape mismatch");
    std::vector<Edge> edges;
    std::vector<int> kinds;
    auto add = [&](int from, int to, EdgeClass cls) {
        edges.emplace_back(from, to);
        kinds.push_back(static_cast<int>(cls));
    };
    for (const auto& [i, j] : sys.A.stars) add(j, i, EdgeClass::StateState);
    for (const auto& [i, j] : sys.B.stars) add(n + j, i, EdgeClass::InputState);
    for (const auto& [i, j] : sys.C.stars) add(j, n + m + i, EdgeClass::StateOutput);
    for (const auto& [i, j] : k.K.stars) add(n + m + j, n + i, EdgeClass::OutputInput);

    std::vector<int> roles(n + m + p, static_cast<int>(VertexRole::State));
    for (int u = 0; u < m; ++u) roles[n + u] = static_cast<int>(VertexRole::Input);
    for (int y = 0; y < p; ++y) roles[n + m + y] = static_cast<int>(VertexRole::Output);
    return make_digraph(n + m + p, std::move(edges), std::move(roles),
                        std::move(kinds));
}

Bipartite build_system_bipartite(const StructuredSystem& sys,
                                 const FeedbackPattern& k) {
    const int n = sys.n(), m = sys.m(), p = sys.p();
    if (k.K.rows != m || k.K.cols != p)
        throw std::invalid_argument("system bipartite: feedback shape mismatch");
    std::vector<Edge> edges;
    std::vector<int> kinds;
    auto add = [&](int l, int r, EdgeClass cls) {
        edges.emplace_back(l, r);
        kinds.push_back(static_cast<int>(cls));
    };
    for (const auto& [i, j] : sys.A.stars) add(i, j, EdgeClass::StateState);
    for (const auto& [i, j] : sys.B.stars) add(i, n + j, EdgeClass::InputState);
    for (const auto& [i, j] : sys.C.stars) add(n + m + i, j, EdgeClass::StateOutput);
    for (const auto& [i, j] : k.K.stars) add(n + i, n + m + j, EdgeClass::OutputInput);
    for (int u = 0; u < m; ++u) add(n + u, n + u, EdgeClass::InputIdentity);
    for (int y = 0; y < p; ++y) add(n + m + y, n + m + y, EdgeClass::OutputIdentity);
    return make_bipartite(n + m + p, n + m + p, std::move(edges), std::move(kinds));
}

bool is_irreducible(const StructuredSystem& sys) {
    const auto blocks = strongly_connected_components(build_state_digraph(sys));
    return blocks.size() == 1;
}

bool is_structurally_cyclic(const StructuredSystem& sys) {
    std::vector<Edge> edges(sys.A.stars.begin(), sys.A.stars.end());
    const auto b = make_bipartite(sys.n(), sys.n(), std::move(edges));
    return max_matching(b).size() == sys.n();
}

Edge feedback_bipartite_edge(const StructuredSystem& sys, int i, int j) {
    return Edge{sys.n() + i, sys.n() + sys.m() + j};
}

Coord feedback_coord_of_bipartite_edge(const StructuredSystem& sys, const Edge& e) {
    return Coord{e.first - sys.n(), e.second - sys.n() - sys.m()};
}

PathCones open_loop_cones(const StructuredSystem& sys) {
    const int n = sys.n(), m = sys.m(), p = sys.p();
    std::vector<std::vector<int>> state_out(n), state_in(n);
    for (const auto& [i, j] : sys.A.stars) {
        state_out[j].push_back(i);
        state_in[i].push_back(j);
    }
    PathCones cones;
    cones.from_input.assign(m, std::vector<char>(n, 0));
    cones.to_output.assign(p, std::vector<char>(n, 0));

    auto flood = [&](std::vector<char>& seen, std::vector<int> frontier,
                     const std::vector<std::vector<int>>& adj) {
        while (!frontier.empty()) {
            const int x = frontier.back();
            frontier.pop_back();
            for (int y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    frontier.push_back(y);
                }
            }
        }
    };
    for (int u = 0; u < m; ++u) {
        std::vector<int> frontier;
        for (const auto& [i, j] : sys.B.stars) {
            if (j == u && !cones.from_input[u][i]) {
                cones.from_input[u][i] = 1;
                frontier.push_back(i);
            }
        }
        flood(cones.from_input[u], std::move(frontier), state_out);
    }
    for (int y = 0; y < p; ++y) {
        std::vector<int> frontier;
        for (const auto& [i, j] : sys.C.stars) {
            if (i == y && !cones.to_output[y][j]) {
                cones.to_output[y][j] = 1;
                frontier.push_back(j);
            }
        }
        flood(cones.to_output[y], std::move(frontier), state_in);
    }
    return cones;
}

}  // namespace strucres
