#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strucres/generators.hpp"
#include "strucres/resilience.hpp"

// Bench harness: generates seeded instances, verifies each with the method
// appropriate to its shape (plus the exhaustive baseline when the removal
// space is small enough) and emits CSV rows. Instances may be processed
// concurrently; rows are emitted in instance order and every column except
// runtime_ms is deterministic. STRUCRES_THREADS caps the worker count.

namespace strucres {

inline constexpr const char* kBenchCsvHeader =
    "family,n,m,p,ek,gamma,method,matching_calls,runtime_ms,resilient";

struct BenchConfig {
    Family family = Family::Irreducible;
    int n = 8;
    int m = 3;
    int p = 3;
    double density = 0.3;
    uint64_t base_seed = 1;
    int seeds = 1;
    std::vector<int> gammas{1};
    // Method for the primary row. nullopt routes per instance shape; only
    // Recursive and Exhaustive may be forced (the others cannot promise a
    // verdict for every generated instance).
    std::optional<Method> method;
    // Run the exhaustive baseline too when C(|feedback stars|, gamma) stays
    // at or below this cap; 0 disables the baseline.
    long exhaustive_cap = 2000;
    int threads = 0;  // 0: decide from hardware and STRUCRES_THREADS
};

// CSV lines, header first.
std::vector<std::string> run_bench(const BenchConfig& config);

// Worker count after applying the STRUCRES_THREADS cap.
int resolve_thread_count(int requested, int jobs);

}  // namespace strucres
