#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "strucres/system.hpp"

using namespace strucres;
using namespace strucres::testing;

TEST_CASE("pattern construction validates coordinates") {
    CHECK_THROWS_AS(make_pattern(2, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(2, 2, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(2, 2, {{0, -1}}), std::invalid_argument);
    const auto p = make_pattern(2, 3, {{1, 2}, {0, 1}});
    CHECK(p.stars == std::vector<Coord>{{0, 1}, {1, 2}});
    CHECK(p.has(1, 2));
    CHECK_FALSE(p.has(0, 0));
}

TEST_CASE("state digraph reverses the row-column orientation") {
    // A(0,1) means state 1 feeds state 0.
    const auto sys = make_system(2, 1, 1, {{0, 1}}, {{0, 0}}, {{0, 1}});
    const auto g = build_state_digraph(sys);
    CHECK(g.edges == std::vector<Edge>{{1, 0}});
}

TEST_CASE("closed-loop digraph of the hub fixture") {
    const auto file = hub_system();
    const auto g = build_closed_loop_digraph(file.sys, *file.k);
    CHECK(g.vertex_count == 11);
    CHECK(g.edges.size() == 17);
    // Feedback edges run output -> input in the combined numbering.
    int feedback = 0;
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (g.edge_labels[e] == static_cast<int>(EdgeClass::OutputInput)) {
            ++feedback;
            CHECK(g.edges[e].first >= 9);
            CHECK(g.edges[e].second >= 7);
            CHECK(g.edges[e].second < 9);
        }
    CHECK(feedback == 2);
}

TEST_CASE("system bipartite graph of the hub fixture") {
    const auto file = hub_system();
    const auto b = build_system_bipartite(file.sys, *file.k);
    CHECK(b.left_count == 11);
    CHECK(b.right_count == 11);
    // 11 state + 2 input + 2 output + 2 feedback + 2 + 2 identity edges.
    CHECK(b.edges.size() == 21);
}

TEST_CASE("bipartite edge classes follow the construction rule") {
    const auto sys = make_system(2, 1, 1, {{0, 1}}, {{1, 0}}, {{0, 0}});
    const auto k = make_feedback(1, 1, {{0, 0}});
    const auto b = build_system_bipartite(sys, k);
    // n=2, m=1, p=1: A(0,1)->(0,1); B(1,0)->(1,2); C(0,0)->(3,0);
    // K(0,0)->(2,3); identities (2,2),(3,3).
    const std::vector<Edge> want{{0, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 0}, {3, 3}};
    CHECK(b.edges == want);
}

TEST_CASE("irreducibility and structural cyclicity of the fixtures") {
    const auto hub = hub_system();
    CHECK_FALSE(is_irreducible(hub.sys));
    CHECK_FALSE(is_structurally_cyclic(hub.sys));

    const auto blocker = small_blocker_reduced();
    CHECK(is_irreducible(blocker.sys));
    CHECK_FALSE(is_structurally_cyclic(blocker.sys));

    const auto chain = chain_cover_reduced();
    CHECK_FALSE(is_irreducible(chain.sys));
    CHECK(is_structurally_cyclic(chain.sys));

    const auto layered = hierarchy_system();
    CHECK_FALSE(is_irreducible(layered.sys));
    CHECK(is_structurally_cyclic(layered.sys));
}

TEST_CASE("feedback coordinates round-trip through bipartite edges") {
    const auto sys = make_system(3, 2, 2, {{0, 0}, {1, 1}, {2, 2}},
                                 {{0, 0}, {1, 1}}, {{0, 1}, {1, 2}});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const auto e = feedback_bipartite_edge(sys, i, j);
            CHECK(e.first == 3 + i);
            CHECK(e.second == 5 + j);
            CHECK(feedback_coord_of_bipartite_edge(sys, e) == Coord{i, j});
        }
}

TEST_CASE("open-loop cones flood along state edges only") {
    // u0 -> x0 -> x1 -> y0; x2 isolated from the chain.
    const auto sys = make_system(3, 1, 1, {{1, 0}, {2, 2}}, {{0, 0}}, {{0, 1}});
    const auto cones = open_loop_cones(sys);
    CHECK(cones.from_input[0] == std::vector<char>{1, 1, 0});
    CHECK(cones.to_output[0] == std::vector<char>{1, 1, 0});
}

TEST_CASE("link removal requires existing stars") {
    const auto k = make_feedback(2, 2, {{0, 0}, {1, 1}});
    const auto masked = remove_links(k, make_removal_set({{0, 0}}));
    CHECK(masked.K.stars == std::vector<Coord>{{1, 1}});
    CHECK_THROWS_AS(remove_links(k, make_removal_set({{0, 1}})),
                    std::invalid_argument);
}
