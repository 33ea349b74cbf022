#pragma once

#include <cstdint>
#include <string>

#include "strucres/graph.hpp"
#include "strucres/system.hpp"

// Seeded instance generators. All randomness flows through SplitMix64, a
// fixed 64-bit generator with portable arithmetic, so a (family, dimensions,
// density, seed) tuple produces identical instances on every platform.
// Each matrix pattern draws from its own stream, derived by hashing the base
// seed with a per-pattern tag; adding stars to one pattern therefore never
// shifts the stars of another.

namespace strucres {

struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in {0..bound-1}; bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }

    // True with probability roughly p, exact to 53-bit resolution.
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
    }
};

// Stream seed for one pattern of one instance.
uint64_t derive_stream(uint64_t seed, uint64_t tag);

enum class Family {
    Irreducible,           // Hamiltonian state cycle plus density extras
    CyclicDiagonal,        // self-loop states, random input/output patterns
    BackEdgeHierarchical,  // layered acyclic states with self-loops
    BipartiteWithPm,       // bipartite graph with a planted perfect matching
};

const char* family_name(Family family);
Family family_from_name(const std::string& name);

struct GenSpec {
    int n = 1;
    int m = 1;
    int p = 1;
    double density = 0.3;
    Family family = Family::Irreducible;
    uint64_t seed = 0;
};

struct GeneratedSystem {
    StructuredSystem sys;
    FeedbackPattern k;
};

// System families. Every input column of B and output row of C is nonempty.
// Irreducible/CyclicDiagonal draw max(1, round(density*m*p)) feedback stars;
// BackEdgeHierarchical returns all feasible back-edges as the pattern.
GeneratedSystem gen_system(const GenSpec& spec);

/// BipartiteWithPm family: n left and m right vertices (n <= m required),
// a planted left-saturating matching plus density extras.
Bipartite gen_bipartite_with_pm(const GenSpec& spec);

}  // namespace strucres
