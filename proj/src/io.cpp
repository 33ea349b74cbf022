#include "strucres/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "strucres/reductions.hpp"

namespace strucres {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw std::invalid_argument("input is not valid JSON");
    return doc;
}

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field: ") + key);
    return doc[key].get<int>();
}

std::vector<Coord> coord_list(const json& doc, const char* key, bool required) {
    if (!doc.contains(key)) {
        if (required)
            throw std::invalid_argument(std::string("missing field: ") + key);
        return {};
    }
    const json& arr = doc[key];
    if (!arr.is_array())
        throw std::invalid_argument(std::string(key) + " must be an array");
    std::vector<Coord> coords;
    coords.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 ||
            !item[0].is_number_integer() || !item[1].is_number_integer())
            throw std::invalid_argument(std::string(key) +
                                        " entries must be [row, col] pairs");
        coords.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return coords;
}

json coords_to_json(const std::vector<Coord>& coords) {
    json arr = json::array();
    for (const auto& [r, c] : coords) arr.push_back(json::array({r, c}));
    return arr;
}

}  // namespace

SystemFile parse_system_file(const std::string& text) {
    const json doc = parse_json(text);
    const int n = require_int(doc, "n");
    const int m = require_int(doc, "m");
    const int p = require_int(doc, "p");
    SystemFile file{
        make_system(n, m, p, coord_list(doc, "A", true),
                    coord_list(doc, "B", true), coord_list(doc, "C", true)),
        std::nullopt, json::object()};
    if (doc.contains("K"))
        file.k = make_feedback(m, p, coord_list(doc, "K", true));
    if (doc.contains("meta")) file.meta = doc["meta"];
    return file;
}

BlockerFile parse_blocker_file(const std::string& text) {
    const json doc = parse_json(text);
    const int left = require_int(doc, "left");
    const int right = require_int(doc, "right");
    std::vector<Edge> edges;
    for (const auto& [l, r] : coord_list(doc, "edges", true))
        edges.push_back({l, r});
    int gamma = 0;
    if (doc.contains("gamma")) gamma = require_int(doc, "gamma");
    BlockerFile file{
        make_blocker_instance(make_bipartite(left, right, std::move(edges)),
                              gamma),
        json::object()};
    if (doc.contains("meta")) file.meta = doc["meta"];
    return file;
}

MsmcFile parse_msmc_file(const std::string& text) {
    const json doc = parse_json(text);
    MsmcFile file;
    file.universe_size = require_int(doc, "universe");
    file.alpha = doc.contains("alpha") ? require_int(doc, "alpha") : 1;
    if (file.alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    if (!doc.contains("sets") || !doc["sets"].is_array())
        throw std::invalid_argument("missing field: sets");
    for (const auto& set : doc["sets"]) {
        if (!set.is_array())
            throw std::invalid_argument("sets entries must be arrays");
        std::vector<int> elements;
        for (const auto& e : set) {
            if (!e.is_number_integer())
                throw std::invalid_argument("set elements must be integers");
            elements.push_back(e.get<int>());
        }
        file.sets.push_back(std::move(elements));
    }
    if (doc.contains("meta")) file.meta = doc["meta"];
    return file;
}

json system_to_json(const StructuredSystem& sys, const FeedbackPattern* k,
                    const json& meta) {
    json doc;
    doc["n"] = sys.n();
    doc["m"] = sys.m();
    doc["p"] = sys.p();
    doc["A"] = coords_to_json(sys.A.stars);
    doc["B"] = coords_to_json(sys.B.stars);
    doc["C"] = coords_to_json(sys.C.stars);
    if (k) doc["K"] = coords_to_json(k->K.stars);
    if (!meta.empty()) doc["meta"] = meta;
    return doc;
}

json bipartite_to_blocker_json(const Bipartite& g, int gamma) {
    json doc;
    doc["left"] = g.left_count;
    doc["right"] = g.right_count;
    json arr = json::array();
    for (const auto& [l, r] : g.edges) arr.push_back(json::array({l, r}));
    doc["edges"] = arr;
    doc["gamma"] = gamma;
    return doc;
}

json sfm_report_to_json(const SfmReport& report, double runtime_ms) {
    json doc;
    doc["no_sfm"] = report.no_sfm;
    doc["condition_a"] = report.condition_a;
    doc["condition_b"] = report.condition_b;
    doc["violating_states_a"] = report.violating_states_a;
    if (report.hall_witness_b) {
        doc["hall_witness_b"] = {{"rights", report.hall_witness_b->rights},
                                 {"lefts", report.hall_witness_b->lefts}};
    }
    doc["runtime_ms"] = runtime_ms;
    return doc;
}

json verification_report_to_json(const ResilienceVerdict& verdict,
                                 double runtime_ms) {
    json doc;
    doc["resilient"] = verdict.resilient;
    doc["gamma"] = verdict.gamma;
    doc["matching_calls"] = verdict.matching_calls;
    doc["method"] = method_name(verdict.method);
    if (verdict.witness) doc["witness"] = coords_to_json(verdict.witness->links);
    doc["runtime_ms"] = runtime_ms;
    return doc;
}

json design_report_to_json(const std::optional<DesignResult>& result,
                           std::optional<bool> verified, double runtime_ms) {
    json doc;
    doc["feasible"] = result.has_value();
    if (result) {
        doc["stars"] = coords_to_json(result->k.K.stars);
        doc["size"] = result->size;
        doc["chosen_sets"] = result->chosen_sets;
    }
    if (verified.has_value()) doc["verified"] = *verified;
    doc["runtime_ms"] = runtime_ms;
    return doc;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

}  // namespace strucres
