#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "jgrog/graph.hpp"

namespace jgrog {

// Predator-prey web: vertex v_i starts with population i.
class Web {
public:
    Web() = default;
    explicit Web(Digraph d) : digraph_(std::move(d)) {}

    const Digraph& digraph() const noexcept { return digraph_; }
    int order() const noexcept { return digraph_.order(); }
    int initial_population(int v) const noexcept { return v; }
    // 1 + 2 + ... + n
    long long total_population() const noexcept {
        const long long n = order();
        return n * (n + 1) / 2;
    }

    bool operator==(const Web&) const = default;

private:
    Digraph digraph_;
};

struct PredationBatch {
    int predator = 0;
    std::vector<int> prey;

    bool operator==(const PredationBatch&) const = default;
};

using Strategy = std::vector<PredationBatch>;

/**
 * Remaining arcs and current populations during a Grog run.
 *
 * Invariant: pop(v) = v - (number of used arcs incident to v) >= 0.
 */
class GrogState {
public:
    explicit GrogState(const Web& web);

    const Digraph& digraph() const noexcept { return digraph_; }
    int population(int v) const { return pop_[v]; }
    // Populations of v_1..v_n.
    std::span<const int> populations() const { return {pop_.data() + 1, pop_.size() - 1}; }
    bool remaining(std::size_t arc) const { return !used_[arc]; }
    std::vector<Arc> remaining_arcs() const;
    std::vector<Arc> used_arcs() const;
    std::size_t used_count() const noexcept { return used_count_; }

    // Remaining arcs whose tail and head both have population >= 1.
    std::vector<Arc> legal_predations() const;
    bool terminal() const;
    long long residual() const;

    // Throws Error(illegal_move) naming the violated precondition; the state is
    // left unchanged on failure.
    void apply(const PredationBatch& batch);

    bool operator==(const GrogState&) const = default;

private:
    Digraph digraph_;
    std::vector<char> used_;
    std::vector<int> pop_;  // index 0 unused
    std::size_t used_count_ = 0;
};

inline GrogState new_state(const Web& web) { return GrogState(web); }
std::vector<Arc> legal_predations(const GrogState& s);
GrogState apply_batch(GrogState s, const PredationBatch& batch);

struct RunResult {
    GrogState final_state;
    long long residual = 0;
    long long predation_count = 0;
    std::vector<Arc> used_arcs;
    bool terminal = false;
};

struct RunOptions {
    // Fail if the strategy stops while legal predations remain.
    bool require_exit = false;
};

// Throws StrategyError with the 0-based step index on an illegal batch.
RunResult run_strategy(const Web& web, const Strategy& strategy, RunOptions options = {});

inline constexpr int default_max_solver_arcs = 24;
inline constexpr int hard_max_solver_arcs = 26;
inline constexpr int default_max_greedy_arcs = 20;

struct SolveResult {
    long long grog = 0;
    Strategy witness;  // one predation per batch
    int max_predations = 0;
    std::uint64_t states_explored = 0;
};

/**
 * Exact grog number: the minimum residual over every strategy.
 *
 * Any legal batch of size l splits into l legal single predations with the
 * same end state, and populations depend only on the used-arc set, so a
 * memoized search over used-arc subsets at single-arc granularity is exact.
 * The witness picks the smallest (predator, prey) arc among optimal moves at
 * each step.
 */
SolveResult solve_exact(const Web& web, int max_arcs = default_max_solver_arcs);

struct GreedySummary {
    // Distinct ordered predator-arc strings produced by greedy runs.
    std::uint64_t count = 0;
    long long min_residual = 0;
};

/**
 * Greedy strategies: each chosen vertex predates along
 * l = min(pop, legal out-arcs) arcs. Every choice of which l arcs to take is
 * explored, and each batch contributes l! orderings to the count.
 */
GreedySummary enumerate_greedy(const Web& web, int max_arcs = default_max_greedy_arcs);

// A uniformly random single-predation sequence run to exit.
Strategy random_maximal_strategy(const Web& web, std::mt19937_64& rng);

// Uniform draw in [0, bound) that does not depend on the standard library's
// distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace jgrog
