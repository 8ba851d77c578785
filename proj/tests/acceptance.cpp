// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "jgrog/claims.hpp"
#include "jgrog/competition.hpp"
#include "jgrog/jaco.hpp"
#include "jgrog/webs.hpp"

using namespace jgrog;

namespace {

// Collects sub-check outcomes for one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
        ok_ = ok_ && ok;
    }
    bool ok() const { return ok_; }
    const std::vector<std::string>& lines() const { return lines_; }

private:
    bool ok_ = true;
    std::vector<std::string> lines_;
};

template <class T>
std::string list(const std::vector<T>& xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? ", " : "") << xs[k];
    os << ']';
    return os.str();
}

struct Cli {
    int code;
    std::string out;
};

Cli cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

void example_one(Checks& c) {
    const auto r = cli({"enumerate", "--graph", "path", "--n", "3", "--dedup", "--distribution",
                        "--format", "json"});
    c.expect(r.code == 0, "enumerate exits 0");
    const auto j = Json::parse(r.out);
    c.expect(j["webs"] == 12, "12 webs (got " + j["webs"].dump() + ")");
    c.expect(j["distribution"] == Json::parse(R"({"2":8,"4":4})"),
             "histogram {2: 8, 4: 4} (got " + j["distribution"].dump() + ")");
    c.expect(j["grog"] == 2, "g(P_3) = 2 (got " + j["grog"].dump() + ")");
    std::vector<std::uint64_t> counts;
    for (const auto& w : enumerate_webs(path_graph(3), {.dedup = true}))
        counts.push_back(enumerate_greedy(w.web).count);
    c.expect(std::all_of(counts.begin(), counts.end(), [](auto k) { return k == 2; }),
             "greedy strategy count 2 for every web " + list(counts));
}

void competition_closed_form(Checks& c) {
    int unequal = 0;
    for (const auto& row : check_jaco_competition(40)) unequal += !row.equal;
    c.expect(unequal == 0, "closed form equals direct for 5 <= n <= 40 (" +
                               std::to_string(unequal) + " differ)");
    const auto c5 = competition_graph(build_jaco(5).digraph);
    c.expect(c5.graph.edges() == std::vector<Edge>{{3, 4}}, "C(J_5) edges {{3,4}}");
    c.expect(c5.isolated == std::vector<int>{1, 2, 5}, "C(J_5) isolated {1,2,5}");
}

void path_recursion(Checks& c) {
    std::vector<long long> g;
    for (int n = 3; n <= 6; ++n) g.push_back(grog_number(path_graph(n)).grog);
    c.expect(g == std::vector<long long>{2, 4, 7, 11}, "g(P_3..P_6) = [2, 4, 7, 11] (got " + list(g) + ")");
    bool rec = g.front() == 2;
    for (int n = 3; n < 6; ++n) rec = rec && g[n - 2] == g[n - 3] + (n - 1);
    c.expect(rec, "g(P_{n+1}) = g(P_n) + (n - 1) seeded at g(P_3) = 2");
}

void jaco_recursion(Checks& c) {
    std::vector<long long> g;
    std::vector<int> jac;
    for (int n = 2; n <= 7; ++n) {
        g.push_back(solve_exact(Web(build_jaco(n).digraph)).grog);
        jac.push_back(jaconian_vertex(n));
    }
    c.expect(g == std::vector<long long>{1, 2, 4, 5, 7, 8},
             "g(J_2..J_7) = [1, 2, 4, 5, 7, 8] (got " + list(g) + ")");
    const std::vector<int> stated = {1, 1, 2, 2, 3, 3};
    c.expect(jac == stated, "Jaconian vertices for n = 2..7 are " + list(stated) + " (computed " +
                                list(jac) + ")");
    bool rec = true, bound = true, inc = true;
    for (int n = 2; n < 7; ++n) {
        const int i = jac[n - 2];
        rec = rec && g[n - 1] == g[n - 2] + (2 * i - n) + 1;
        inc = inc && g[n - 1] > g[n - 2];
    }
    for (int n = 2; n <= 7; ++n) bound = bound && 2 * jac[n - 2] - n >= 0;
    c.expect(rec, "g(J_{n+1}) = g(J_n) + (2i - n) + 1 with the computed Jaconian vertices");
    c.expect(bound, "2i - n >= 0 with the computed Jaconian vertices");
    c.expect(inc, "g(J_n) strictly increasing");
}

const ClaimReport& claim(const HarnessReport& r, const std::string& id) {
    for (const auto& c : r.claims)
        if (c.id == id) return c;
    throw std::runtime_error("report lacks " + id);
}

void run_properties(Checks& c) {
    const HarnessConfig cfg;
    for (const char* id : {"lemma-2.1", "lemma-2.2", "lemma-2.3"}) {
        const auto r = run_claim(id, cfg);
        const auto& rep = claim(r, id);
        c.expect(rep.status == ClaimStatus::pass,
                 std::string(id) + " " + to_string(rep.status) + " over " +
                     std::to_string(rep.instances) + " runs");
        c.expect(rep.instances >= 1000, std::string(id) + " covers at least 1000 runs");
        for (const auto& f : rep.failures) c.expect(false, "counterexample " + f.dump());
    }
}

void greedy_equivalence(Checks& c) {
    const HarnessConfig cfg;
    const auto r = run_claim("def-2.2-equivalence", cfg);
    const auto& rep = claim(r, "def-2.2-equivalence");
    c.expect(rep.status == ClaimStatus::pass,
             "greedy minimum equals exact grog on " + std::to_string(rep.instances) + " webs");
    c.expect(rep.values["random_webs"] == 200, "200 seeded random webs included");
    for (const auto& f : rep.failures) c.expect(false, "counterexample " + f.dump());
}

void orientation_divergence(Checks& c) {
    const std::vector<std::pair<std::string, UGraph>> bases = {
        {"P_3", path_graph(3)},   {"P_4", path_graph(4)},   {"P_5", path_graph(5)},
        {"C_3", cycle_graph(3)},  {"C_4", cycle_graph(4)},  {"star_4", star_graph(4)},
        {"K_4", complete_graph(4)},
    };
    for (const auto& [name, g] : bases) {
        const auto s = survey_webs(g, {.dedup = true});
        c.expect(s.min_grog != s.max_grog, name + ": distinct grog numbers over " +
                                               std::to_string(s.webs) + " webs (values " +
                                               list(std::vector<long long>{s.min_grog, s.max_grog}) + ")");
    }
    const long long o1 = solve_exact(Web(make_digraph(3, std::vector<Arc>{{1, 2}, {2, 3}}))).grog;
    const long long o2 = solve_exact(Web(make_digraph(3, std::vector<Arc>{{2, 1}, {1, 3}}))).grog;
    c.expect(o1 == 2 && o2 == 4, "P_3 witness pair realizes 2 and 4 (got " +
                                     std::to_string(o1) + ", " + std::to_string(o2) + ")");
}

void report_only(Checks& c) {
    const auto r = cli({"verify", "--all", "--seed", "42", "--format", "json"});
    const auto j = Json::parse(r.out);
    Json cycle, versus;
    for (const auto& item : j["claims"]) {
        if (item["id"] == "prop-2.7") cycle = item;
        if (item["id"] == "cor-2.8") versus = item;
    }
    c.expect(cycle.is_object() && versus.is_object(), "report has prop-2.7 and cor-2.8");
    if (!cycle.is_object() || !versus.is_object()) return;
    c.expect(cycle["status"] == "reported" && versus["status"] == "reported", "both are report-only");
    c.expect(cycle["values"]["n"] == Json({3, 4, 5, 6}), "g(C_n) recorded for n = 3..6: " +
                                                              cycle["values"]["g_cycle"].dump());
    c.expect(cycle["values"]["delta_g_cycle"].size() == 3,
             "g(C_{n+1}) - g(C_n) recorded: " + cycle["values"]["delta_g_cycle"].dump());
    c.expect(versus["values"]["g_cycle_minus_g_path"].size() == 4,
             "g(C_n) - g(P_n) recorded: " + versus["values"]["g_cycle_minus_g_path"].dump());
    c.expect(cycle["values"]["g_cycle"][0] == 2, "g(C_3) = 2");
}

void determinism(Checks& c) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "jgrog_acceptance_a.json").string();
    const auto b = (dir / "jgrog_acceptance_b.json").string();
    const auto ra = cli({"verify", "--all", "--seed", "42", "--out", a});
    const auto rb = cli({"verify", "--all", "--seed", "42", "--out", b});
    const auto ta = read_text_file(a), tb = read_text_file(b);
    c.expect(!ta.empty(), "report written");
    c.expect(ta == tb, "reports byte-identical (" + std::to_string(ta.size()) + " bytes)");
    c.expect(ra.out == rb.out, "summaries identical");
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no runtime bound
    std::function<void(Checks&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "example-1-reproduction", 1.0, example_one},
        {2, "competition-closed-form", 5.0, competition_closed_form},
        {3, "path-recursion", 120.0, path_recursion},
        {4, "jaco-recursion", 60.0, jaco_recursion},
        {5, "lemma-properties", 0.0, run_properties},
        {6, "greedy-equivalence", 0.0, greedy_equivalence},
        {7, "orientation-divergence", 0.0, orientation_divergence},
        {8, "report-only-findings", 0.0, report_only},
        {9, "determinism", 0.0, determinism},
    };
    return all;
}

bool run_one(const Criterion& c) {
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.run(checks);
    } catch (const std::exception& e) {
        checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0) {
        std::ostringstream os;
        os << "runtime " << secs << " s < " << c.limit_seconds << " s";
        checks.expect(secs < c.limit_seconds, os.str());
    }
    std::cout << (checks.ok() ? "PASS" : "FAIL") << "  AC" << c.id << ' ' << c.name << " ("
              << secs << " s)\n";
    for (const auto& line : checks.lines()) std::cout << line << '\n';
    return checks.ok();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    int only = 0;
    if (args.size() == 2 && args[0] == "--criterion") {
        only = std::stoi(args[1]);
    } else if (!args.empty()) {
        std::cerr << "usage: acceptance [--criterion N]\n";
        return 2;
    }
    bool ok = true;
    bool ran = false;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        ran = true;
        ok = run_one(c) && ok;
    }
    if (!ran) {
        std::cerr << "no criterion " << only << '\n';
        return 2;
    }
    return ok ? 0 : 1;
}
