#include <algorithm>
#include <set>

#include "doctest.h"
#include "strucres/design.hpp"
#include "strucres/generators.hpp"
#include "strucres/graph.hpp"
#include "strucres/system.hpp"

using namespace strucres;

namespace {

GenSpec base_spec(Family family, uint64_t seed) {
    GenSpec spec;
    spec.family = family;
    spec.n = 5;
    spec.m = 3;
    spec.p = 2;
    spec.density = 0.4;
    spec.seed = seed;
    return spec;
}

bool same_instance(const GeneratedSystem& a, const GeneratedSystem& b) {
    return a.sys.A.stars == b.sys.A.stars && a.sys.B.stars == b.sys.B.stars &&
           a.sys.C.stars == b.sys.C.stars && a.k.K.stars == b.k.K.stars;
}

}  // namespace

TEST_CASE("generation is a pure function of the spec") {
    for (const auto family : {Family::Irreducible, Family::CyclicDiagonal,
                              Family::BackEdgeHierarchical}) {
        for (uint64_t seed : {0ull, 7ull, 123456789ull}) {
            const auto spec = base_spec(family, seed);
            CAPTURE(family_name(family));
            CAPTURE(seed);
            CHECK(same_instance(gen_system(spec), gen_system(spec)));
        }
    }
    const auto spec_a = base_spec(Family::Irreducible, 1);
    const auto spec_b = base_spec(Family::Irreducible, 2);
    CHECK_FALSE(same_instance(gen_system(spec_a), gen_system(spec_b)));

    auto bip = base_spec(Family::BipartiteWithPm, 9);
    bip.m = bip.n + 1;
    const auto g1 = gen_bipartite_with_pm(bip);
    const auto g2 = gen_bipartite_with_pm(bip);
    CHECK(g1.edges == g2.edges);
}

TEST_CASE("every family honours its structural contract") {
    SplitMix64 rng(derive_stream(81, 1));
    for (int trial = 0; trial < 25; ++trial) {
        GenSpec spec;
        spec.n = 2 + static_cast<int>(rng.below(6));
        spec.m = 1 + static_cast<int>(rng.below(3));
        spec.p = 1 + static_cast<int>(rng.below(3));
        spec.density = 0.1 + 0.1 * static_cast<double>(rng.below(9));
        spec.seed = rng.next();
        CAPTURE(trial);

        spec.family = Family::Irreducible;
        const auto irr = gen_system(spec);
        CHECK(is_irreducible(irr.sys));

        spec.family = Family::CyclicDiagonal;
        const auto cyc = gen_system(spec);
        CHECK(cyc.sys.A.star_count() == spec.n);
        for (int i = 0; i < spec.n; ++i) CHECK(cyc.sys.A.has(i, i));
        CHECK(is_structurally_cyclic(cyc.sys));

        spec.family = Family::BackEdgeHierarchical;
        const auto lay = gen_system(spec);
        CHECK(is_structurally_cyclic(lay.sys));
        for (const auto& [i, j] : lay.sys.A.stars) CHECK(j <= i);
        CHECK(lay.k.K.stars == feasible_back_edges(lay.sys));

        // Covering guarantees shared by the system families: every input
        // actuates some state, every output senses some state, and at least
        // one feedback star exists.
        for (const auto* inst : {&irr, &cyc, &lay}) {
            std::set<int> b_cols, c_rows;
            for (const auto& [r, c] : inst->sys.B.stars) b_cols.insert(c);
            for (const auto& [r, c] : inst->sys.C.stars) c_rows.insert(r);
            CHECK(static_cast<int>(b_cols.size()) == spec.m);
            CHECK(static_cast<int>(c_rows.size()) == spec.p);
            CHECK(inst->k.K.star_count() >= 1);
        }
    }
}

TEST_CASE("feedback star budget follows the density") {
    GenSpec spec = base_spec(Family::CyclicDiagonal, 3);
    spec.m = 4;
    spec.p = 5;
    spec.density = 0.5;
    CHECK(gen_system(spec).k.K.star_count() == 10);
    spec.density = 0.0;
    CHECK(gen_system(spec).k.K.star_count() == 1);
    spec.density = 1.0;
    CHECK(gen_system(spec).k.K.star_count() == 20);
}

TEST_CASE("planted matchings saturate the left side") {
    SplitMix64 rng(derive_stream(81, 2));
    GenSpec spec;
    spec.family = Family::BipartiteWithPm;
    for (int trial = 0; trial < 25; ++trial) {
        spec.n = 1 + static_cast<int>(rng.below(5));
        spec.m = spec.n + static_cast<int>(rng.below(3));
        spec.density = 0.1 + 0.1 * static_cast<double>(rng.below(9));
        spec.seed = rng.next();
        const auto g = gen_bipartite_with_pm(spec);
        CAPTURE(trial);
        CHECK(g.left_count == spec.n);
        CHECK(g.right_count == spec.m);
        CHECK(has_perfect_matching(g));
    }
}

TEST_CASE("family names round-trip and misuse throws") {
    for (const auto family : {Family::Irreducible, Family::CyclicDiagonal,
                              Family::BackEdgeHierarchical,
                              Family::BipartiteWithPm})
        CHECK(family_from_name(family_name(family)) == family);
    CHECK_THROWS_AS(family_from_name("diagonal"), std::invalid_argument);

    GenSpec spec = base_spec(Family::BipartiteWithPm, 1);
    CHECK_THROWS_AS(gen_system(spec), std::invalid_argument);
    spec.family = Family::Irreducible;
    CHECK_THROWS_AS(gen_bipartite_with_pm(spec), std::invalid_argument);
    spec.n = 0;
    CHECK_THROWS_AS(gen_system(spec), std::invalid_argument);
    spec.n = 3;
    spec.density = 1.5;
    CHECK_THROWS_AS(gen_system(spec), std::invalid_argument);
    spec.density = 0.5;
    spec.family = Family::BipartiteWithPm;
    spec.n = 4;
    spec.m = 3;
    CHECK_THROWS_AS(gen_bipartite_with_pm(spec), std::invalid_argument);
}

TEST_CASE("stream derivation separates seeds and tags") {
    std::set<uint64_t> streams;
    for (uint64_t seed : {0ull, 1ull, 2ull, 99ull})
        for (uint64_t tag = 1; tag <= 5; ++tag)
            streams.insert(derive_stream(seed, tag));
    CHECK(streams.size() == 20);
}
