#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strucres/design.hpp"
#include "strucres/reductions.hpp"
#include "strucres/resilience.hpp"
#include "strucres/sfm.hpp"
#include "strucres/system.hpp"

// File formats. A system file is a JSON object
//   {"n":.., "m":.., "p":.., "A":[[r,c]..], "B":[[r,c]..], "C":[[r,c]..],
//    "K":[[r,c]..]?, "meta":{..}?}
// with 0-indexed coordinates. Reports are JSON objects with sorted keys;
// every timing field is named runtime_ms so consumers can strip it before
// comparing runs.

namespace strucres {

struct SystemFile {
    StructuredSystem sys;
    std::optional<FeedbackPattern> k;
    nlohmann::json meta;
};

struct BlockerFile {
    BlockerInstance inst;
    nlohmann::json meta;
};

struct MsmcFile {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
    int alpha = 1;
    nlohmann::json meta;
};

// Parsers throw std::invalid_argument on malformed input.
SystemFile parse_system_file(const std::string& text);
BlockerFile parse_blocker_file(const std::string& text);
MsmcFile parse_msmc_file(const std::string& text);

nlohmann::json system_to_json(const StructuredSystem& sys,
                              const FeedbackPattern* k,
                              const nlohmann::json& meta);
nlohmann::json bipartite_to_blocker_json(const Bipartite& g, int gamma);

nlohmann::json sfm_report_to_json(const SfmReport& report, double runtime_ms);
nlohmann::json verification_report_to_json(const ResilienceVerdict& verdict,
                                           double runtime_ms);
// verified: nullopt when the post-check was skipped.
nlohmann::json design_report_to_json(const std::optional<DesignResult>& result,
                                     std::optional<bool> verified,
                                     double runtime_ms);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace strucres
