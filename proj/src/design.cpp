#include "strucres/design.hpp"

#include <algorithm>
#include <stdexcept>

#include "strucres/resilience.hpp"

namespace strucres {

std::vector<Coord> feasible_back_edges(const StructuredSystem& sys) {
    const auto cones = open_loop_cones(sys);
    std::vector<Coord> edges;
    for (int i = 0; i < sys.m(); ++i) {
        for (int j = 0; j < sys.p(); ++j) {
            bool reachable = false;
            for (int x = 0; x < sys.n() && !reachable; ++x)
                reachable = cones.from_input[i][x] && cones.to_output[j][x];
            if (reachable) edges.push_back({i, j});
        }
    }
    return edges;
}

MsmcInstance reduce_design_to_msmc(const StructuredSystem& sys, int gamma) {
    if (gamma < 0) throw std::invalid_argument("design: negative budget");
    if (!is_structurally_cyclic(sys))
        throw VerifierError(VerifierError::Code::NotCyclic,
                            "design requires a structurally cyclic system");
    const auto cones = open_loop_cones(sys);
    MsmcInstance inst;
    inst.universe_size = sys.n();
    inst.demand = gamma + 1;
    for (const auto& [i, j] : feasible_back_edges(sys)) {
        std::vector<int> covered;
        for (int x = 0; x < sys.n(); ++x)
            if (cones.from_input[i][x] && cones.to_output[j][x])
                covered.push_back(x);
        inst.sets.push_back(std::move(covered));
        inst.set_provenance.push_back({i, j});
    }
    return inst;
}

std::optional<std::vector<int>> greedy_msmc(const MsmcInstance& inst) {
    const int n = inst.universe_size;
    const int sets = static_cast<int>(inst.sets.size());
    std::vector<int> frequency(n, 0);
    for (const auto& s : inst.sets)
        for (int e : s) {
            if (e < 0 || e >= n)
                throw std::invalid_argument("multi-cover: element out of range");
            ++frequency[e];
        }
    for (int e = 0; e < n; ++e)
        if (frequency[e] < inst.demand) return std::nullopt;

    std::vector<int> remaining(n, inst.demand);
    long total = static_cast<long>(inst.demand) * n;
    std::vector<char> used(sets, 0);
    std::vector<int> picked;
    while (total > 0) {
        int best = -1, best_gain = 0;
        for (int s = 0; s < sets; ++s) {
            if (used[s]) continue;
            int gain = 0;
            for (int e : inst.sets[s]) gain += remaining[e] > 0 ? 1 : 0;
            if (gain > best_gain) {
                best_gain = gain;
                best = s;
            }
        }
        used[best] = 1;
        picked.push_back(best);
        for (int e : inst.sets[best]) {
            if (remaining[e] > 0) {
                --remaining[e];
                --total;
            }
        }
    }
    return picked;
}

namespace {

DesignResult assemble_result(const StructuredSystem& sys,
                             const MsmcInstance& inst,
                             std::vector<int> chosen) {
    std::vector<Coord> stars;
    stars.reserve(chosen.size());
    for (int s : chosen) stars.push_back(inst.set_provenance[s]);
    DesignResult result{make_feedback(sys.m(), sys.p(), std::move(stars)),
                        std::move(chosen), 0};
    result.size = result.k.K.star_count();
    return result;
}

}  // namespace

std::optional<DesignResult> design_sparsest(const StructuredSystem& sys,
                                            int gamma) {
    const auto inst = reduce_design_to_msmc(sys, gamma);
    auto chosen = greedy_msmc(inst);
    if (!chosen) return std::nullopt;
    return assemble_result(sys, inst, std::move(*chosen));
}

std::optional<DesignResult> brute_force_design(const StructuredSystem& sys,
                                               int gamma) {
    if (gamma < 0) throw std::invalid_argument("design: negative budget");
    if (!is_structurally_cyclic(sys))
        throw VerifierError(VerifierError::Code::NotCyclic,
                            "design requires a structurally cyclic system");
    const auto candidates = feasible_back_edges(sys);
    const int total = static_cast<int>(candidates.size());
    if (total > 20)
        throw std::invalid_argument(
            "brute_force_design: too many feasible back-edges");

    // Resilience is monotone in the star set, so the full candidate pattern
    // decides feasibility.
    {
        const auto full = make_feedback(sys.m(), sys.p(), candidates);
        if (!verify_exhaustive(sys, full, gamma).resilient) return std::nullopt;
    }
    for (int size = 0; size <= total; ++size) {
        std::optional<DesignResult> found;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<Coord> stars;
            stars.reserve(size);
            for (int i : idx) stars.push_back(candidates[i]);
            const auto k = make_feedback(sys.m(), sys.p(), stars);
            if (verify_exhaustive(sys, k, gamma).resilient) {
                std::vector<int> chosen(idx.begin(), idx.end());
                found = DesignResult{k, std::move(chosen), size};
                break;
            }
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == total - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (found) return found;
    }
    return std::nullopt;  // unreachable: the full pattern passed
}

}  // namespace strucres
