#include "strucres/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "strucres/design.hpp"

namespace strucres {

namespace {

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

enum : uint64_t {
    kTagA = 1,
    kTagB = 2,
    kTagC = 3,
    kTagK = 4,
    kTagG = 5,
};

// First `take` elements of a seeded shuffle of {0..total-1}.
std::vector<int> sample_without_replacement(int total, int take, SplitMix64& rng) {
    std::vector<int> pool(total);
    for (int i = 0; i < total; ++i) pool[i] = i;
    for (int i = 0; i < take; ++i) {
        const int j = i + static_cast<int>(rng.below(total - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(take);
    return pool;
}

// One guaranteed star per column plus density extras.
std::vector<Coord> column_covering_pattern(int rows, int cols, double density,
                                           SplitMix64& rng) {
    std::vector<std::vector<char>> star(rows, std::vector<char>(cols, 0));
    for (int j = 0; j < cols; ++j) star[rng.below(rows)][j] = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!star[i][j] && rng.chance(density)) star[i][j] = 1;
    std::vector<Coord> coords;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (star[i][j]) coords.push_back({i, j});
    return coords;
}

// One guaranteed star per row plus density extras.
std::vector<Coord> row_covering_pattern(int rows, int cols, double density,
                                        SplitMix64& rng) {
    std::vector<std::vector<char>> star(rows, std::vector<char>(cols, 0));
    for (int i = 0; i < rows; ++i) star[i][rng.below(cols)] = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!star[i][j] && rng.chance(density)) star[i][j] = 1;
    std::vector<Coord> coords;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (star[i][j]) coords.push_back({i, j});
    return coords;
}

std::vector<Coord> sampled_feedback_stars(const GenSpec& spec) {
    SplitMix64 rng(derive_stream(spec.seed, kTagK));
    const int total = spec.m * spec.p;
    int count = static_cast<int>(std::lround(spec.density * total));
    count = std::max(1, std::min(count, total));
    std::vector<Coord> stars;
    for (int flat : sample_without_replacement(total, count, rng))
        stars.push_back({flat / spec.p, flat % spec.p});
    return stars;
}

GeneratedSystem gen_irreducible(const GenSpec& spec) {
    SplitMix64 rng_a(derive_stream(spec.seed, kTagA));
    const int n = spec.n;
    std::vector<std::vector<char>> star(n, std::vector<char>(n, 0));
    const auto order = sample_without_replacement(n, n, rng_a);
    for (int t = 0; t < n; ++t) {
        const int from = order[t], to = order[(t + 1) % n];
        star[to][from] = 1;  // edge from -> to
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!star[i][j] && rng_a.chance(spec.density)) star[i][j] = 1;
    std::vector<Coord> a_stars;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (star[i][j]) a_stars.push_back({i, j});

    SplitMix64 rng_b(derive_stream(spec.seed, kTagB));
    SplitMix64 rng_c(derive_stream(spec.seed, kTagC));
    auto sys = make_system(
        n, spec.m, spec.p, std::move(a_stars),
        column_covering_pattern(n, spec.m, spec.density, rng_b),
        row_covering_pattern(spec.p, n, spec.density, rng_c));
    auto k = make_feedback(spec.m, spec.p, sampled_feedback_stars(spec));
    return GeneratedSystem{std::move(sys), std::move(k)};
}

GeneratedSystem gen_cyclic_diagonal(const GenSpec& spec) {
    const int n = spec.n;
    std::vector<Coord> a_stars;
    for (int i = 0; i < n; ++i) a_stars.push_back({i, i});

    SplitMix64 rng_b(derive_stream(spec.seed, kTagB));
    SplitMix64 rng_c(derive_stream(spec.seed, kTagC));
    auto sys = make_system(
        n, spec.m, spec.p, std::move(a_stars),
        column_covering_pattern(n, spec.m, spec.density, rng_b),
        row_covering_pattern(spec.p, n, spec.density, rng_c));
    auto k = make_feedback(spec.m, spec.p, sampled_feedback_stars(spec));
    return GeneratedSystem{std::move(sys), std::move(k)};
}

GeneratedSystem gen_back_edge_hierarchical(const GenSpec& spec) {
    SplitMix64 rng_a(derive_stream(spec.seed, kTagA));
    const int n = spec.n;
    std::vector<Coord> a_stars;
    for (int i = 0; i < n; ++i) a_stars.push_back({i, i});
    // Forward edges only (from lower to higher state index): the state
    // digraph is a layered DAG plus self-loops, so every candidate feedback
    // link is a genuine back-edge.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (rng_a.chance(spec.density)) a_stars.push_back({i, j});

    SplitMix64 rng_b(derive_stream(spec.seed, kTagB));
    SplitMix64 rng_c(derive_stream(spec.seed, kTagC));
    auto sys = make_system(
        n, spec.m, spec.p, std::move(a_stars),
        column_covering_pattern(n, spec.m, spec.density, rng_b),
        row_covering_pattern(spec.p, n, spec.density, rng_c));
    auto k = make_feedback(spec.m, spec.p, feasible_back_edges(sys));
    return GeneratedSystem{std::move(sys), std::move(k)};
}

}  // namespace

uint64_t derive_stream(uint64_t seed, uint64_t tag) {
    return mix64(seed ^ (tag * 0xA0761D6478BD642Full));
}

const char* family_name(Family family) {
    switch (family) {
        case Family::Irreducible: return "irreducible";
        case Family::CyclicDiagonal: return "cyclic_diagonal";
        case Family::BackEdgeHierarchical: return "back_edge_hierarchical";
        case Family::BipartiteWithPm: return "bipartite_with_pm";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "irreducible") return Family::Irreducible;
    if (name == "cyclic_diagonal") return Family::CyclicDiagonal;
    if (name == "back_edge_hierarchical") return Family::BackEdgeHierarchical;
    if (name == "bipartite_with_pm") return Family::BipartiteWithPm;
    throw std::invalid_argument("unknown family: " + name);
}

GeneratedSystem gen_system(const GenSpec& spec) {
    if (spec.n < 1 || spec.m < 1 || spec.p < 1)
        throw std::invalid_argument("generator: dimensions must be positive");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw std::invalid_argument("generator: density must lie in [0,1]");
    switch (spec.family) {
        case Family::Irreducible: return gen_irreducible(spec);
        case Family::CyclicDiagonal: return gen_cyclic_diagonal(spec);
        case Family::BackEdgeHierarchical: return gen_back_edge_hierarchical(spec);
        case Family::BipartiteWithPm:
            throw std::invalid_argument(
                "generator: bipartite family has no system form");
    }
    throw std::invalid_argument("generator: unknown family");
}

Bipartite gen_bipartite_with_pm(const GenSpec& spec) {
    if (spec.family != Family::BipartiteWithPm)
        throw std::invalid_argument("generator: family is not bipartite_with_pm");
    if (spec.n < 1 || spec.m < spec.n)
        throw std::invalid_argument(
            "generator: need 1 <= left size <= right size");
    SplitMix64 rng(derive_stream(spec.seed, kTagG));
    std::vector<std::vector<char>> edge(spec.n, std::vector<char>(spec.m, 0));
    const auto planted = sample_without_replacement(spec.m, spec.n, rng);
    for (int l = 0; l < spec.n; ++l) edge[l][planted[l]] = 1;
    for (int l = 0; l < spec.n; ++l)
        for (int r = 0; r < spec.m; ++r)
            if (!edge[l][r] && rng.chance(spec.density)) edge[l][r] = 1;
    std::vector<Edge> edges;
    for (int l = 0; l < spec.n; ++l)
        for (int r = 0; r < spec.m; ++r)
            if (edge[l][r]) edges.push_back({l, r});
    return make_bipartite(spec.n, spec.m, std::move(edges));
}

}  // namespace strucres
