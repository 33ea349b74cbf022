#pragma once

#include <string>

#include "strucres/io.hpp"

// Loaders for the checked-in instance files under tests/data. The same
// files back the library tests, the CLI tests and the golden reports.

namespace strucres {
namespace testing {

std::string data_path(const std::string& name);
std::string cli_path();

SystemFile load_system_fixture(const std::string& name);

// 7-state hub-and-leaves system with a 2-cycle appendix; its bipartite
// pattern violates Hall's condition, so the intact loop has fixed modes.
SystemFile hub_system();

// 2x3 bipartite blocker instance: no single edge kills the matching, one
// pair does.
BlockerFile small_blocker();
SystemFile small_blocker_reduced();

// Chain-shaped multi-cover: universe 5, sets {0,1},{1,2},{2,3,4}; element 0
// lies in one set only.
MsmcFile chain_cover();
SystemFile chain_cover_reduced();
// Same system with every feasible back-edge closed.
SystemFile chain_cover_full_k();

// Wider multi-cover: universe 6, six sets, greedy and optimum both need 3.
MsmcFile wide_cover();

// 6-state layered system with self-loops: structurally cyclic, reducible,
// five feasible back-edges.
SystemFile hierarchy_system();

}  // namespace testing
}  // namespace strucres
