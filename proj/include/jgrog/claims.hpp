#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jgrog/grog.hpp"
#include "jgrog/io.hpp"

namespace jgrog {

enum class ClaimMode { assert_claim, report_only };
enum class ClaimStatus { pass, fail, skipped, reported };

const char* to_string(ClaimMode mode);
const char* to_string(ClaimStatus status);

struct ClaimReport {
    std::string id;
    ClaimMode mode = ClaimMode::assert_claim;
    ClaimStatus status = ClaimStatus::pass;
    std::uint64_t instances = 0;
    Json failures = Json::array();
    Json values = Json::object();

    // Records a counterexample; only the first few are kept verbatim, the
    // total lands in values["failure_count"].
    void fail(Json counterexample);
    Json to_json() const;
};

// Replays a strategy on a web. Defaults to run_strategy; tests swap in faulty
// engines to check that the harness notices.
using StrategyRunner = std::function<RunResult(const Web&, const Strategy&)>;

struct HarnessConfig {
    std::uint64_t seed = 42;

    int random_webs = 200;    // random connected webs in the property corpus
    int random_max_n = 7;
    int runs_per_web = 10;    // random maximal runs per corpus web

    int greedy_random_webs = 200;
    int greedy_max_arcs = 10;

    int competition_n_max = 40;   // closed-form competition graph check
    int path_n_max = 6;
    int cycle_n_max = 6;
    int extension_n_max = 5;  // largest extended path order in the extension survey
    int jaco_n_max = 8;       // exhaustive grog numbers of J_n(1)
    int jaconian_n_max = 300;

    int max_arcs = default_max_solver_arcs;

    StrategyRunner runner;  // empty means run_strategy
};

// Ids in report order.
const std::vector<std::string>& claim_ids();

// Dedup webs of P_3, P_4, C_3, C_4 followed by cfg.random_webs random connected webs.
std::vector<Web> property_corpus(const HarnessConfig& cfg);

ClaimReport check_exit_state(const std::vector<Web>& corpus, const HarnessConfig& cfg);
// {parity report, arc-count report}
std::vector<ClaimReport> check_parity_and_arc_count(const std::vector<Web>& corpus,
                                                    const HarnessConfig& cfg);
ClaimReport check_termination(const std::vector<Web>& corpus, const HarnessConfig& cfg);
ClaimReport check_determinism(const std::vector<Web>& corpus, const HarnessConfig& cfg);
ClaimReport check_greedy_equivalence(const std::vector<Web>& corpus, const HarnessConfig& cfg);

ClaimReport check_jaco_competition_claim(int n_max);
ClaimReport check_path_recursion(int n_max);
ClaimReport check_path_extensions(int n_max);
ClaimReport check_orientation_divergence(const std::vector<UGraph>& bases);
// {cycle step report, cycle-vs-path report}; both report-only.
std::vector<ClaimReport> check_cycle_relations(int n_max);
ClaimReport check_jaconian_bound(int n_max);
// {recursion report, monotonicity report}
std::vector<ClaimReport> check_jaco_recursion(int n_max, int max_arcs = default_max_solver_arcs);
ClaimReport check_web_count();

struct HarnessReport {
    std::uint64_t seed = 0;
    std::vector<ClaimReport> claims;

    bool passed() const;
    Json to_json() const;
    std::string summary() const;
};

HarnessReport run_all(const HarnessConfig& cfg);
// Runs the checks needed for one claim id; throws Error(out_of_domain) on an
// unknown id.
HarnessReport run_claim(const std::string& id, const HarnessConfig& cfg);

}  // namespace jgrog
