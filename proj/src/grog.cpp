#include "jgrog/grog.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

#include "jgrog/error.hpp"

namespace jgrog {

GrogState::GrogState(const Web& web)
    : digraph_(web.digraph()), used_(web.digraph().size(), 0), pop_(web.order() + 1, 0) {
    for (int v = 1; v <= web.order(); ++v) pop_[v] = web.initial_population(v);
}

std::vector<Arc> GrogState::remaining_arcs() const {
    std::vector<Arc> out;
    for (std::size_t k = 0; k < used_.size(); ++k)
        if (!used_[k]) out.push_back(digraph_.arcs()[k]);
    return out;
}

std::vector<Arc> GrogState::used_arcs() const {
    std::vector<Arc> out;
    for (std::size_t k = 0; k < used_.size(); ++k)
        if (used_[k]) out.push_back(digraph_.arcs()[k]);
    return out;
}

std::vector<Arc> GrogState::legal_predations() const {
    std::vector<Arc> out;
    const auto& arcs = digraph_.arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (!used_[k] && pop_[arcs[k].tail] >= 1 && pop_[arcs[k].head] >= 1) out.push_back(arcs[k]);
    return out;
}

bool GrogState::terminal() const {
    const auto& arcs = digraph_.arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (!used_[k] && pop_[arcs[k].tail] >= 1 && pop_[arcs[k].head] >= 1) return false;
    return true;
}

long long GrogState::residual() const {
    long long sum = 0;
    for (int v = 1; v < static_cast<int>(pop_.size()); ++v) sum += pop_[v];
    return sum;
}

void GrogState::apply(const PredationBatch& batch) {
    auto fail = [](const std::string& why) { throw Error(ErrorKind::illegal_move, why); };
    const int n = digraph_.order();
    const int u = batch.predator;
    if (u < 1 || u > n) fail("predator v_" + std::to_string(u) + " is not a vertex");
    if (batch.prey.empty()) fail("batch for predator v_" + std::to_string(u) + " has no prey");

    std::vector<std::size_t> picked;
    picked.reserve(batch.prey.size());
    for (int p : batch.prey) {
        const std::string arc = "(" + std::to_string(u) + "," + std::to_string(p) + ")";
        auto k = digraph_.find_arc(u, p);
        if (!k) fail("arc " + arc + " is not in the web");
        if (used_[*k]) fail("arc " + arc + " was already used");
        if (std::find(picked.begin(), picked.end(), *k) != picked.end())
            fail("arc " + arc + " repeated within one batch");
        if (pop_[p] < 1) fail("prey v_" + std::to_string(p) + " is exhausted");
        picked.push_back(*k);
    }
    const int l = static_cast<int>(picked.size());
    if (pop_[u] < l)
        fail("predator v_" + std::to_string(u) + " has population " + std::to_string(pop_[u]) +
             " < " + std::to_string(l) + " arcs");

    for (std::size_t k : picked) used_[k] = 1;
    used_count_ += picked.size();
    pop_[u] -= l;
    for (int p : batch.prey) --pop_[p];
}

std::vector<Arc> legal_predations(const GrogState& s) { return s.legal_predations(); }

GrogState apply_batch(GrogState s, const PredationBatch& batch) {
    s.apply(batch);
    return s;
}

RunResult run_strategy(const Web& web, const Strategy& strategy, RunOptions options) {
    GrogState state(web);
    for (std::size_t step = 0; step < strategy.size(); ++step) {
        try {
            state.apply(strategy[step]);
        } catch (const Error& e) {
            throw StrategyError(step, e.what());
        }
    }
    const bool terminal = state.terminal();
    if (options.require_exit && !terminal)
        throw StrategyError(strategy.size(), "strategy ends before exit; legal predations remain");

    RunResult out{state, state.residual(), static_cast<long long>(state.used_count()),
                  state.used_arcs(), terminal};
    return out;
}

namespace {

void check_arc_cap(const Web& web, int max_arcs, int hard_max) {
    if (max_arcs > hard_max) max_arcs = hard_max;
    if (static_cast<long long>(web.digraph().size()) > max_arcs)
        throw Error(ErrorKind::cap_exceeded,
                    "web has " + std::to_string(web.digraph().size()) + " arcs, cap is " +
                        std::to_string(max_arcs));
}

class ExactSearch {
public:
    explicit ExactSearch(const Web& web)
        : m_(static_cast<int>(web.digraph().size())),
          pop_(web.order() + 1, 0),
          memo_(std::size_t{1} << m_, -1) {
        for (const auto& a : web.digraph().arcs()) {
            tail_.push_back(a.tail);
            head_.push_back(a.head);
        }
        for (int v = 1; v <= web.order(); ++v) pop_[v] = v;
    }

    // Maximum number of further predations from the used-arc set `mask`.
    int best(std::uint32_t mask) {
        if (memo_[mask] >= 0) return memo_[mask];
        ++explored_;
        const int ceiling = m_ - std::popcount(mask);
        int b = 0;
        for (int k = 0; k < m_ && b < ceiling; ++k) {
            if (!legal(mask, k)) continue;
            take(k, -1);
            b = std::max(b, 1 + best(mask | (std::uint32_t{1} << k)));
            take(k, +1);
        }
        memo_[mask] = static_cast<std::int8_t>(b);
        return b;
    }

    std::vector<int> witness() {
        std::vector<int> path;
        std::uint32_t mask = 0;
        int left = best(0);
        while (left > 0) {
            for (int k = 0; k < m_; ++k) {
                if (!legal(mask, k)) continue;
                const std::uint32_t next = mask | (std::uint32_t{1} << k);
                take(k, -1);
                if (1 + best(next) == left) {
                    path.push_back(k);
                    mask = next;
                    --left;
                    break;
                }
                take(k, +1);
            }
        }
        return path;
    }

    std::uint64_t explored() const { return explored_; }

private:
    bool legal(std::uint32_t mask, int k) const {
        return !((mask >> k) & 1U) && pop_[tail_[k]] > 0 && pop_[head_[k]] > 0;
    }
    void take(int k, int delta) {
        pop_[tail_[k]] += delta;
        pop_[head_[k]] += delta;
    }

    int m_;
    std::vector<int> tail_, head_;
    std::vector<int> pop_;
    std::vector<std::int8_t> memo_;
    std::uint64_t explored_ = 0;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::cap_exceeded, "greedy strategy count overflows 64 bits");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::cap_exceeded, "greedy strategy count overflows 64 bits");
    return r;
}

class GreedySearch {
public:
    explicit GreedySearch(const Web& web) : n_(web.order()), pop_(web.order() + 1, 0) {
        const auto& arcs = web.digraph().arcs();
        out_.resize(n_ + 1);
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            head_.push_back(arcs[k].head);
            out_[arcs[k].tail].push_back(static_cast<int>(k));
        }
        for (int v = 1; v <= n_; ++v) pop_[v] = v;
    }

    GreedySummary run(std::uint32_t mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

        GreedySummary acc{0, -1};
        for (int v = 1; v <= n_; ++v) {
            if (pop_[v] < 1) continue;
            std::vector<int> legal;
            for (int k : out_[v])
                if (!((mask >> k) & 1U) && pop_[head_[k]] > 0) legal.push_back(k);
            if (legal.empty()) continue;
            const int l = std::min<int>(pop_[v], static_cast<int>(legal.size()));
            const std::uint64_t orderings = factorial(l);

            // every l-subset of the legal out-arcs, in lexicographic index order
            std::vector<int> pick(l);
            for (int x = 0; x < l; ++x) pick[x] = x;
            while (true) {
                std::uint32_t next = mask;
                for (int x : pick) {
                    next |= std::uint32_t{1} << legal[x];
                    --pop_[head_[legal[x]]];
                }
                pop_[v] -= l;
                const auto sub = run(next);
                pop_[v] += l;
                for (int x : pick) ++pop_[head_[legal[x]]];

                acc.count = checked_add(acc.count, checked_mul(orderings, sub.count));
                if (acc.min_residual < 0 || sub.min_residual < acc.min_residual)
                    acc.min_residual = sub.min_residual;

                int x = l - 1;
                while (x >= 0 && pick[x] == static_cast<int>(legal.size()) - l + x) --x;
                if (x < 0) break;
                ++pick[x];
                for (int y = x + 1; y < l; ++y) pick[y] = pick[y - 1] + 1;
            }
        }
        if (acc.min_residual < 0) {
            long long residual = 0;
            for (int v = 1; v <= n_; ++v) residual += pop_[v];
            acc = {1, residual};
        }
        memo_.emplace(mask, acc);
        return acc;
    }

private:
    int n_;
    std::vector<int> pop_;
    std::vector<int> head_;
    std::vector<std::vector<int>> out_;
    std::unordered_map<std::uint32_t, GreedySummary> memo_;
};

}  // namespace

SolveResult solve_exact(const Web& web, int max_arcs) {
    check_arc_cap(web, max_arcs, hard_max_solver_arcs);
    ExactSearch search(web);
    SolveResult out;
    out.max_predations = search.best(0);
    out.grog = web.total_population() - 2LL * out.max_predations;
    for (int k : search.witness()) {
        const auto& a = web.digraph().arcs()[k];
        out.witness.push_back({a.tail, {a.head}});
    }
    out.states_explored = search.explored();
    return out;
}

GreedySummary enumerate_greedy(const Web& web, int max_arcs) {
    check_arc_cap(web, max_arcs, default_max_greedy_arcs);
    GreedySearch search(web);
    return search.run(0);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::out_of_domain, "uniform_below needs bound > 0");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

Strategy random_maximal_strategy(const Web& web, std::mt19937_64& rng) {
    GrogState state(web);
    Strategy out;
    for (auto legal = state.legal_predations(); !legal.empty(); legal = state.legal_predations()) {
        const auto& a = legal[uniform_below(rng, legal.size())];
        PredationBatch batch{a.tail, {a.head}};
        state.apply(batch);
        out.push_back(std::move(batch));
    }
    return out;
}

}  // namespace jgrog
