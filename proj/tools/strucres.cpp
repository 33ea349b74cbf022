// strucres: command-line front end for the structured-resilience library.
//
// Subcommands: sfm, verify, design, reduce (blocker|msmc), gen, bench.
// Exit codes: 0 = positive verdict / success, 1 = negative verdict
// (SFMs present, not resilient, infeasible design), 2 = usage or input
// error, unmet method precondition, or an inconclusive forced fast path.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strucres/bench.hpp"
#include "strucres/design.hpp"
#include "strucres/generators.hpp"
#include "strucres/io.hpp"
#include "strucres/reductions.hpp"
#include "strucres/resilience.hpp"
#include "strucres/sfm.hpp"

namespace {

using nlohmann::json;
using namespace strucres;

class Timer {
  public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

void emit_json(const json& doc, const std::string& out_path) {
    emit(doc.dump(2) + "\n", out_path);
}

SystemFile load_system(const std::string& path) {
    return parse_system_file(read_text_file(path));
}

FeedbackPattern require_feedback(const SystemFile& file) {
    if (!file.k)
        throw std::invalid_argument("system file carries no feedback pattern K");
    return *file.k;
}

// C(n, k) saturating at cap + 1.
long binomial_capped(int n, int k, long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long value = 1;
    for (int i = 1; i <= k; ++i) {
        if (value > cap) return cap + 1;
        value = value * (n - k + i) / i;
    }
    return std::min(value, cap + 1);
}

int cmd_sfm(const std::string& path, const std::string& out_path) {
    const SystemFile file = load_system(path);
    const FeedbackPattern k = require_feedback(file);
    const Timer timer;
    const SfmReport report = has_no_sfm(file.sys, k);
    emit_json(sfm_report_to_json(report, timer.elapsed_ms()), out_path);
    return report.no_sfm ? 0 : 1;
}

int cmd_verify(const std::string& path, int gamma, const std::string& method,
               const std::string& out_path) {
    const SystemFile file = load_system(path);
    const FeedbackPattern k = require_feedback(file);
    const Timer timer;
    ResilienceVerdict verdict;
    if (method == "auto") {
        verdict = verify_auto(file.sys, k, gamma);
    } else if (method == "gamma1" || method == "gamma2") {
        const int fixed = method == "gamma1" ? 1 : 2;
        if (gamma != fixed)
            throw std::invalid_argument("method " + method + " requires --gamma " +
                                        std::to_string(fixed));
        verdict = fixed == 1 ? verify_gamma1(file.sys, k)
                             : verify_gamma2(file.sys, k);
    } else if (method == "recursive") {
        verdict = verify_recursive(file.sys, k, gamma);
    } else if (method == "exhaustive") {
        verdict = verify_exhaustive(file.sys, k, gamma);
    } else if (method == "cyclic-fast") {
        const CyclicFastReport fast = verify_cyclic_fast(file.sys, k, gamma);
        if (fast.verdict == FastVerdict::Inconclusive) {
            std::cerr << "error: fast path is inconclusive on this instance; "
                         "rerun with --method auto\n";
            return 2;
        }
        verdict.resilient = fast.verdict == FastVerdict::Resilient;
        verdict.witness = fast.witness;
        verdict.gamma = gamma;
        verdict.matching_calls = fast.matching_calls;
        verdict.method = Method::CyclicFast;
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    emit_json(verification_report_to_json(verdict, timer.elapsed_ms()), out_path);
    return verdict.resilient ? 0 : 1;
}

int cmd_design(const std::string& path, int gamma, bool exact,
               const std::string& out_path) {
    const SystemFile file = load_system(path);
    const Timer timer;
    const std::optional<DesignResult> result =
        exact ? brute_force_design(file.sys, gamma)
              : design_sparsest(file.sys, gamma);
    // Confirm the designed pattern with the exhaustive verifier when the
    // removal sweep stays small.
    constexpr long kVerifySweepCap = 5000;
    std::optional<bool> verified;
    if (result) {
        const int ek = result->k.K.star_count();
        if (binomial_capped(ek, std::min(gamma, ek), kVerifySweepCap) <=
            kVerifySweepCap)
            verified = verify_exhaustive(file.sys, result->k, gamma).resilient;
    }
    emit_json(design_report_to_json(result, verified, timer.elapsed_ms()),
              out_path);
    return result ? 0 : 1;
}

int cmd_reduce_blocker(const std::string& path, const std::string& out_path) {
    const BlockerFile file = parse_blocker_file(read_text_file(path));
    const auto [sys, k] = reduce_blocker_to_verification(file.inst);
    json meta = file.meta;
    meta["source"] = "blocker";
    meta["gamma"] = file.inst.gamma;
    emit_json(system_to_json(sys, &k, meta), out_path);
    return 0;
}

int cmd_reduce_msmc(const std::string& path, const std::string& out_path) {
    const MsmcFile file = parse_msmc_file(read_text_file(path));
    const StructuredSystem sys = reduce_msmc_to_design(file.universe_size, file.sets);
    json meta = file.meta;
    meta["source"] = "msmc";
    meta["alpha"] = file.alpha;
    meta["gamma"] = file.alpha - 1;
    emit_json(system_to_json(sys, nullptr, meta), out_path);
    return 0;
}

int cmd_gen(const GenSpec& spec, int blocker_gamma, const std::string& out_path) {
    if (spec.family == Family::BipartiteWithPm) {
        const Bipartite g = gen_bipartite_with_pm(spec);
        emit_json(bipartite_to_blocker_json(g, blocker_gamma), out_path);
        return 0;
    }
    const GeneratedSystem inst = gen_system(spec);
    json meta;
    meta["family"] = family_name(spec.family);
    meta["seed"] = spec.seed;
    meta["density"] = spec.density;
    emit_json(system_to_json(inst.sys, &inst.k, meta), out_path);
    return 0;
}

json bench_rows_to_json(const std::vector<std::string>& lines) {
    json rows = json::array();
    for (size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> fields;
        std::string field;
        for (char c : lines[i]) {
            if (c == ',') {
                fields.push_back(field);
                field.clear();
            } else {
                field += c;
            }
        }
        fields.push_back(field);
        json row;
        row["family"] = fields[0];
        row["n"] = std::stoi(fields[1]);
        row["m"] = std::stoi(fields[2]);
        row["p"] = std::stoi(fields[3]);
        row["ek"] = std::stoi(fields[4]);
        row["gamma"] = std::stoi(fields[5]);
        row["method"] = fields[6];
        row["matching_calls"] = std::stol(fields[7]);
        row["runtime_ms"] = std::stod(fields[8]);
        row["resilient"] = std::stoi(fields[9]);
        rows.push_back(row);
    }
    return rows;
}

int cmd_bench(const BenchConfig& config, const std::string& format,
              const std::string& out_path) {
    const std::vector<std::string> lines = run_bench(config);
    if (format == "json") {
        emit_json(bench_rows_to_json(lines), out_path);
        return 0;
    }
    std::string text;
    for (const auto& line : lines) {
        text += line;
        text += '\n';
    }
    emit(text, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification and design of failure-resilient feedback "
                 "patterns for structured systems"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    int gamma = 1;
    std::string method = "auto";
    bool exact = false;

    auto* sfm = app.add_subcommand(
        "sfm", "Check a closed loop for structurally fixed modes");
    sfm->add_option("file", in_path, "system JSON file (K required)")->required();
    sfm->add_option("--out", out_path, "write the report here instead of stdout");

    auto* verify = app.add_subcommand(
        "verify", "Verify resilience to feedback link failures");
    verify->add_option("file", in_path, "system JSON file (K required)")->required();
    verify->add_option("--gamma", gamma, "failure budget")->required();
    verify
        ->add_option("--method", method,
                     "auto|gamma1|gamma2|recursive|exhaustive|cyclic-fast")
        ->check(CLI::IsMember({"auto", "gamma1", "gamma2", "recursive",
                               "exhaustive", "cyclic-fast"}));
    verify->add_option("--out", out_path, "write the report here instead of stdout");

    auto* design = app.add_subcommand(
        "design", "Design a sparsest resilient back-edge feedback pattern");
    design->add_option("file", in_path, "system JSON file (K ignored)")->required();
    design->add_option("--gamma", gamma, "failure budget")->required();
    design->add_flag("--exact", exact,
                     "replace the greedy cover with the exact search "
                     "(needs <= 20 candidate back-edges)");
    design->add_option("--out", out_path, "write the report here instead of stdout");

    auto* reduce = app.add_subcommand(
        "reduce", "Rewrite an instance of one problem as another");
    reduce->require_subcommand(1);
    auto* reduce_blocker = reduce->add_subcommand(
        "blocker", "matching-blocker instance -> verification system file");
    reduce_blocker->add_option("file", in_path, "blocker JSON file")->required();
    reduce_blocker->add_option("--out", out_path,
                               "write the system file here instead of stdout");
    auto* reduce_msmc = reduce->add_subcommand(
        "msmc", "set multi-cover instance -> design system file");
    reduce_msmc->add_option("file", in_path, "multi-cover JSON file")->required();
    reduce_msmc->add_option("--out", out_path,
                            "write the system file here instead of stdout");

    GenSpec spec;
    std::string family = "irreducible";
    auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("--family", family,
                    "irreducible|cyclic_diagonal|back_edge_hierarchical|"
                    "bipartite_with_pm")
        ->required();
    gen->add_option("--n", spec.n, "states (left vertices for bipartite)")->required();
    gen->add_option("--m", spec.m, "inputs (right vertices for bipartite)")->required();
    gen->add_option("--p", spec.p, "outputs");
    gen->add_option("--density", spec.density, "extra-star fraction in [0,1]");
    gen->add_option("--seed", spec.seed, "64-bit stream seed");
    gen->add_option("--gamma", gamma, "budget embedded in blocker output");
    gen->add_option("--out", out_path, "write the instance here instead of stdout");

    BenchConfig bench_config;
    std::string bench_family = "irreducible";
    std::string bench_method = "auto";
    std::string format = "csv";
    auto* bench = app.add_subcommand(
        "bench", "Verify seeded instances and emit one CSV row per run");
    bench->add_option("--family", bench_family,
                      "irreducible|cyclic_diagonal|back_edge_hierarchical")
        ->required();
    bench->add_option("--n", bench_config.n, "states")->required();
    bench->add_option("--m", bench_config.m, "inputs")->required();
    bench->add_option("--p", bench_config.p, "outputs");
    bench->add_option("--density", bench_config.density, "extra-star fraction");
    bench->add_option("--seed", bench_config.base_seed, "first seed");
    bench->add_option("--seeds", bench_config.seeds, "number of consecutive seeds");
    bench->add_option("--gammas", bench_config.gammas, "failure budgets")
        ->delimiter(',');
    bench->add_option("--method", bench_method, "auto|recursive|exhaustive");
    bench->add_option("--cap", bench_config.exhaustive_cap,
                      "run the exhaustive baseline while C(|E_K|, gamma) <= cap "
                      "(0 disables it)");
    bench->add_option("--threads", bench_config.threads,
                      "worker threads (0 = hardware, capped by STRUCRES_THREADS)");
    bench->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--out", out_path, "write rows here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sfm->parsed()) return cmd_sfm(in_path, out_path);
        if (verify->parsed()) return cmd_verify(in_path, gamma, method, out_path);
        if (design->parsed()) return cmd_design(in_path, gamma, exact, out_path);
        if (reduce_blocker->parsed()) return cmd_reduce_blocker(in_path, out_path);
        if (reduce_msmc->parsed()) return cmd_reduce_msmc(in_path, out_path);
        if (gen->parsed()) {
            spec.family = family_from_name(family);
            return cmd_gen(spec, gamma, out_path);
        }
        if (bench->parsed()) {
            bench_config.family = family_from_name(bench_family);
            if (bench_config.family == Family::BipartiteWithPm)
                throw std::invalid_argument(
                    "bench runs system families only; bipartite_with_pm "
                    "instances feed `reduce blocker`");
            if (bench_method == "recursive")
                bench_config.method = Method::Recursive;
            else if (bench_method == "exhaustive")
                bench_config.method = Method::Exhaustive;
            else if (bench_method != "auto")
                throw std::invalid_argument("unknown bench method: " +
                                            bench_method);
            return cmd_bench(bench_config, format, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
