#include "fixtures.hpp"

#ifndef STRUCRES_TEST_DATA_DIR
#error "STRUCRES_TEST_DATA_DIR must point at tests/data"
#endif
#ifndef STRUCRES_CLI_PATH
#define STRUCRES_CLI_PATH ""
#endif

namespace strucres {
namespace testing {

std::string data_path(const std::string& name) {
    return std::string(STRUCRES_TEST_DATA_DIR) + "/" + name;
}

std::string cli_path() { return STRUCRES_CLI_PATH; }

SystemFile load_system_fixture(const std::string& name) {
    return parse_system_file(read_text_file(data_path(name)));
}

SystemFile hub_system() { return load_system_fixture("hub_system.json"); }

BlockerFile small_blocker() {
    return parse_blocker_file(read_text_file(data_path("blocker_small.json")));
}

SystemFile small_blocker_reduced() {
    return load_system_fixture("blocker_small_reduced.json");
}

MsmcFile chain_cover() {
    return parse_msmc_file(read_text_file(data_path("cover_chain_msmc.json")));
}

SystemFile chain_cover_reduced() {
    return load_system_fixture("cover_chain_reduced.json");
}

SystemFile chain_cover_full_k() {
    return load_system_fixture("cover_chain_full_k.json");
}

MsmcFile wide_cover() {
    return parse_msmc_file(read_text_file(data_path("cover_wide_msmc.json")));
}

SystemFile hierarchy_system() {
    return load_system_fixture("hierarchy_system.json");
}

}  // namespace testing
}  // namespace strucres
