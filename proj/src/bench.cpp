#include "strucres/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace strucres {

namespace {

// C(n, k), saturating at cap + 1 so callers can compare against cap safely.
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

std::string csv_row(const BenchConfig& config, int ek, int gamma,
                    const ResilienceVerdict& verdict, double runtime_ms) {
    std::ostringstream out;
    out << family_name(config.family) << ',' << config.n << ',' << config.m
        << ',' << config.p << ',' << ek << ',' << gamma << ','
        << method_name(verdict.method) << ',' << verdict.matching_calls << ',';
    out.setf(std::ios::fixed);
    out.precision(3);
    out << runtime_ms << ',' << (verdict.resilient ? 1 : 0);
    return out.str();
}

template <typename Run>
std::string timed_row(const BenchConfig& config, int ek, int gamma, Run&& run) {
    const auto start = std::chrono::steady_clock::now();
    const ResilienceVerdict verdict = run();
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return csv_row(config, ek, gamma, verdict, ms);
}

}  // namespace

int resolve_thread_count(int requested, int jobs) {
    if (jobs <= 0) return 1;
    int threads = requested;
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    if (const char* env = std::getenv("STRUCRES_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0)
            threads = static_cast<int>(std::min<long>(threads, cap));
    }
    return std::max(1, std::min(threads, jobs));
}

std::vector<std::string> run_bench(const BenchConfig& config) {
    if (config.method && *config.method != Method::Recursive &&
        *config.method != Method::Exhaustive)
        throw std::invalid_argument(
            "bench: only the recursive and exhaustive methods can be forced");
    if (config.method == Method::Recursive)
        for (int gamma : config.gammas)
            if (gamma < 1)
                throw std::invalid_argument(
                    "bench: the recursive method needs budgets >= 1");

    struct Job {
        uint64_t seed;
        int gamma;
    };
    std::vector<Job> jobs;
    for (int s = 0; s < config.seeds; ++s)
        for (int gamma : config.gammas)
            jobs.push_back(Job{config.base_seed + static_cast<uint64_t>(s), gamma});

    // rows[i] collects the lines for jobs[i]; emitting per-job blocks in job
    // order keeps the output independent of scheduling.
    std::vector<std::vector<std::string>> rows(jobs.size());
    std::atomic<size_t> next{0};
    std::mutex error_lock;
    std::string error;
    const auto worker = [&] {
        while (true) {
            const size_t at = next.fetch_add(1);
            if (at >= jobs.size()) break;
            const Job& job = jobs[at];
            try {
                GenSpec spec;
                spec.n = config.n;
                spec.m = config.m;
                spec.p = config.p;
                spec.density = config.density;
                spec.family = config.family;
                spec.seed = job.seed;
                const GeneratedSystem inst = gen_system(spec);
                const int ek = inst.k.K.star_count();

                rows[at].push_back(timed_row(config, ek, job.gamma, [&] {
                    if (config.method == Method::Recursive)
                        return verify_recursive(inst.sys, inst.k, job.gamma);
                    if (config.method == Method::Exhaustive)
                        return verify_exhaustive(inst.sys, inst.k, job.gamma);
                    return verify_auto(inst.sys, inst.k, job.gamma);
                }));
                const bool baseline_distinct =
                    config.method != Method::Exhaustive;
                const long sweep = binomial_capped(ek, std::min(job.gamma, ek),
                                                   config.exhaustive_cap);
                if (baseline_distinct && config.exhaustive_cap > 0 &&
                    sweep <= config.exhaustive_cap) {
                    rows[at].push_back(timed_row(config, ek, job.gamma, [&] {
                        return verify_exhaustive(inst.sys, inst.k, job.gamma);
                    }));
                }
            } catch (const std::exception& e) {
                const std::lock_guard<std::mutex> hold(error_lock);
                if (error.empty()) error = e.what();
            }
        }
    };

    const int thread_count =
        resolve_thread_count(config.threads, static_cast<int>(jobs.size()));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!error.empty()) throw std::runtime_error(error);

    std::vector<std::string> out;
    out.push_back(kBenchCsvHeader);
    for (auto& block : rows)
        for (auto& line : block) out.push_back(std::move(line));
    return out;
}

}  // namespace strucres
