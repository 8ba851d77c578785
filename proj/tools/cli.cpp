#include "cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "jgrog/claims.hpp"
#include "jgrog/competition.hpp"
#include "jgrog/error.hpp"
#include "jgrog/io.hpp"
#include "jgrog/jaco.hpp"
#include "jgrog/webs.hpp"

namespace jgrog {

namespace {

constexpr int hard_max_enumerate_n = 10;
constexpr int hard_max_enumerate_edges = 20;

enum class Format { text, json, dot, csv };

struct Shared {
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 42;
    int max_arcs = default_max_solver_arcs;
    std::optional<int> max_n;
};

Format format_of(const Shared& s, std::initializer_list<Format> allowed) {
    static const std::pair<const char*, Format> names[] = {
        {"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}, {"csv", Format::csv}};
    for (const auto& [name, f] : names) {
        if (s.format != name) continue;
        for (auto a : allowed)
            if (a == f) return f;
    }
    throw Error(ErrorKind::out_of_domain, "format " + s.format + " is not available here");
}

void add_shared(CLI::App* sub, Shared& s) {
    sub->add_option("--format", s.format, "text | json | dot | csv")
        ->check(CLI::IsMember({"text", "json", "dot", "csv"}));
    sub->add_option("--out", s.out, "write data to this file instead of stdout");
    sub->add_option("--seed", s.seed, "random seed");
    sub->add_option("--max-arcs", s.max_arcs, "solver arc cap")
        ->check(CLI::Range(1, hard_max_solver_arcs));
    sub->add_option("--max-n", s.max_n, "vertex cap");
}

void emit(const Shared& s, const std::string& text, std::ostream& out) {
    if (s.out.empty())
        out << text;
    else
        write_text_file(s.out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string arc_list(const std::vector<Arc>& arcs) {
    std::ostringstream os;
    for (std::size_t k = 0; k < arcs.size(); ++k)
        os << (k ? " " : "") << arcs[k].tail << "->" << arcs[k].head;
    return os.str();
}

std::string edge_list(const std::vector<Edge>& edges) {
    std::ostringstream os;
    for (std::size_t k = 0; k < edges.size(); ++k)
        os << (k ? " " : "") << edges[k].u << "-" << edges[k].v;
    return os.str();
}

std::string int_list(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
    return os.str();
}

std::string strategy_text(const Strategy& s) {
    std::ostringstream os;
    for (const auto& b : s) os << "  " << b.predator << " -> " << int_list(b.prey) << '\n';
    return os.str();
}

int jaco_cap(const Shared& s) {
    const int cap = s.max_n.value_or(default_max_jaco_order);
    if (cap < 1 || cap > default_max_jaco_order)
        throw Error(ErrorKind::cap_exceeded, "--max-n exceeds the compiled limit");
    return cap;
}

// --- jaco ---

struct JacoArgs {
    Shared shared;
    int n = 0;
};

int cmd_jaco(const JacoArgs& a, std::ostream& out) {
    const auto f = format_of(a.shared, {Format::text, Format::json, Format::dot});
    const auto j = build_jaco(a.n, jaco_cap(a.shared));
    if (f == Format::json) {
        emit(a.shared, dump(to_json(j)), out);
    } else if (f == Format::dot) {
        emit(a.shared, to_dot(j.digraph), out);
    } else {
        std::ostringstream os;
        os << "J_" << j.n << "(1): " << j.n << " vertices, " << j.digraph.size() << " arcs\n";
        os << "jaconian: " << (j.jaconian ? std::to_string(*j.jaconian) : "none") << '\n';
        os << "arcs: " << arc_list(j.digraph.arcs()) << '\n';
        emit(a.shared, os.str(), out);
    }
    return 0;
}

// --- competition ---

struct CompetitionArgs {
    Shared shared;
    std::string input;
    std::optional<int> jaco;
    bool closed_form = false;
    bool check = false;
};

int cmd_competition(const CompetitionArgs& a, std::ostream& out) {
    const auto f = format_of(a.shared, {Format::text, Format::json, Format::dot});
    if (a.input.empty() == !a.jaco)
        throw Error(ErrorKind::out_of_domain, "give exactly one of --input and --jaco");
    if ((a.closed_form || a.check) && !a.jaco)
        throw Error(ErrorKind::out_of_domain, "--closed-form and --check need --jaco");

    if (a.check) {
        const auto rows = check_jaco_competition(*a.jaco);
        bool all_equal = true;
        Json j = Json::array();
        for (const auto& r : rows) {
            all_equal = all_equal && r.equal;
            j.push_back({{"n", r.n}, {"equal", r.equal}});
        }
        if (f == Format::json) {
            Json doc;
            doc["verdict"] = all_equal ? "equal" : "differs";
            doc["checks"] = j;
            emit(a.shared, dump(doc), out);
        } else {
            std::ostringstream os;
            os << (all_equal ? "equal" : "differs") << '\n';
            for (const auto& r : rows)
                if (!r.equal)
                    os << "n=" << r.n << " missing: " << edge_list(r.missing)
                       << " extra: " << edge_list(r.extra) << '\n';
            emit(a.shared, os.str(), out);
        }
        return all_equal ? 0 : 1;
    }

    CompetitionGraph c;
    if (a.jaco) {
        if (*a.jaco > jaco_cap(a.shared))
            throw Error(ErrorKind::cap_exceeded, "n exceeds --max-n");
        c = a.closed_form ? jaco_competition_closed_form(*a.jaco)
                          : competition_graph(build_jaco(*a.jaco).digraph);
    } else {
        c = competition_graph(parse_digraph(read_text_file(a.input)));
    }
    if (f == Format::json) {
        emit(a.shared, dump(to_json(c)), out);
    } else if (f == Format::dot) {
        emit(a.shared, to_dot(c.graph), out);
    } else {
        std::ostringstream os;
        os << "edges: " << edge_list(c.graph.edges()) << '\n';
        os << "isolated: " << int_list(c.isolated) << '\n';
        emit(a.shared, os.str(), out);
    }
    return 0;
}

// --- grog ---

struct GrogArgs {
    Shared shared;
    std::string input;
    std::optional<int> jaco;
    std::string strategy;
    bool witness = false;
    bool require_exit = false;
};

Web load_web(const GrogArgs& a) {
    if (a.input.empty() == !a.jaco)
        throw Error(ErrorKind::out_of_domain, "give exactly one of --input and --jaco");
    if (a.jaco) return Web(build_jaco(*a.jaco, jaco_cap(a.shared)).digraph);
    return Web(parse_digraph(read_text_file(a.input)));
}

int cmd_grog_solve(const GrogArgs& a, std::ostream& out) {
    const auto f = format_of(a.shared, {Format::text, Format::json});
    const Web web = load_web(a);
    const auto r = solve_exact(web, a.shared.max_arcs);
    if (f == Format::json) {
        emit(a.shared, dump(to_json(r, a.witness)), out);
    } else {
        std::ostringstream os;
        os << "grog: " << r.grog << '\n';
        os << "max predations: " << r.max_predations << '\n';
        if (a.witness) os << "witness:\n" << strategy_text(r.witness);
        emit(a.shared, os.str(), out);
    }
    return 0;
}

int cmd_grog_run(const GrogArgs& a, std::ostream& out) {
    const auto f = format_of(a.shared, {Format::text, Format::json});
    const Web web = load_web(a);
    const Strategy s = parse_strategy(read_text_file(a.strategy));
    const auto r = run_strategy(web, s, {.require_exit = a.require_exit});
    if (f == Format::json) {
        emit(a.shared, dump(to_json(r)), out);
    } else {
        std::ostringstream os;
        const auto pops = r.final_state.populations();
        os << "residual: " << r.residual << '\n';
        os << "predations: " << r.predation_count << '\n';
        os << "terminal: " << (r.terminal ? "yes" : "no") << '\n';
        os << "population: " << int_list({pops.begin(), pops.end()}) << '\n';
        emit(a.shared, os.str(), out);
    }
    return 0;
}

// --- enumerate ---

struct EnumerateArgs {
    Shared shared;
    std::string graph = "path";
    std::optional<int> n;
    std::string input;
    bool dedup = false;
    bool distribution = false;
    int max_edges = default_max_web_edges;
};

UGraph base_graph(const EnumerateArgs& a) {
    if (a.graph == "file") {
        if (a.input.empty()) throw Error(ErrorKind::out_of_domain, "--graph file needs --input");
        return parse_ugraph(read_text_file(a.input));
    }
    if (!a.n) throw Error(ErrorKind::out_of_domain, "--graph " + a.graph + " needs --n");
    if (a.graph == "path") return path_graph(*a.n);
    if (a.graph == "cycle") return cycle_graph(*a.n);
    if (a.graph == "star") return star_graph(*a.n);
    return complete_graph(*a.n);
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const auto f = format_of(a.shared, {Format::text, Format::json, Format::csv});
    EnumerateOptions opts;
    opts.dedup = a.dedup;
    opts.max_n = a.shared.max_n.value_or(default_max_indexing_order);
    opts.max_edges = a.max_edges;
    if (opts.max_n < 1 || opts.max_n > hard_max_enumerate_n)
        throw Error(ErrorKind::cap_exceeded, "--max-n exceeds the compiled limit");
    if (opts.max_edges < 0 || opts.max_edges > hard_max_enumerate_edges)
        throw Error(ErrorKind::cap_exceeded, "--max-edges exceeds the compiled limit");

    const UGraph g = base_graph(a);
    const auto survey = survey_webs(g, opts, a.shared.max_arcs);

    if (f == Format::csv) {
        emit(a.shared, distribution_csv(survey.distribution), out);
    } else if (f == Format::json) {
        Json doc;
        doc["base"] = to_json(g);
        doc["dedup"] = a.dedup;
        doc["webs"] = survey.webs;
        doc["grog"] = survey.min_grog;
        doc["min_web"] = to_json(survey.min_web.web.digraph());
        doc["witness"] = to_json(survey.min_solve.witness);
        if (a.distribution) {
            Json h = Json::object();
            for (const auto& [r, c] : survey.distribution) h[std::to_string(r)] = c;
            doc["distribution"] = h;
        }
        emit(a.shared, dump(doc), out);
    } else {
        std::ostringstream os;
        os << "webs: " << survey.webs << '\n';
        os << "grog: " << survey.min_grog << '\n';
        os << "min web: " << arc_list(survey.min_web.web.digraph().arcs()) << '\n';
        if (a.distribution) os << distribution_csv(survey.distribution);
        emit(a.shared, os.str(), out);
    }
    return 0;
}

// --- verify ---

struct VerifyArgs {
    Shared shared;
    std::string claim;
    bool all = false;
    std::optional<int> n_max;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const auto f = format_of(a.shared, {Format::text, Format::json});
    if (a.claim.empty() == !a.all)
        throw Error(ErrorKind::out_of_domain, "give exactly one of --claim and --all");
    HarnessConfig cfg;
    cfg.seed = a.shared.seed;
    cfg.max_arcs = a.shared.max_arcs;
    if (a.n_max) {
        cfg.competition_n_max = cfg.path_n_max = cfg.cycle_n_max = *a.n_max;
        cfg.extension_n_max = cfg.jaco_n_max = cfg.jaconian_n_max = *a.n_max;
    }
    if (a.shared.max_n) cfg.random_max_n = *a.shared.max_n;
    if (cfg.random_max_n < 2 || cfg.random_max_n > hard_max_enumerate_n)
        throw Error(ErrorKind::cap_exceeded, "--max-n outside [2, 10]");

    const auto report = a.all ? run_all(cfg) : run_claim(a.claim, cfg);
    const std::string json = dump(report.to_json());
    if (!a.shared.out.empty()) {
        write_text_file(a.shared.out, json);
        err << "report written to " << a.shared.out << '\n';
    }
    out << (f == Format::json ? json : report.summary());
    return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jaco graphs, competition graphs and the Grog predator-prey game"};
    app.name("jgrog");
    app.require_subcommand(1, 1);

    JacoArgs jaco;
    auto* jaco_cmd = app.add_subcommand("jaco", "build J_n(1)");
    add_shared(jaco_cmd, jaco.shared);
    jaco_cmd->add_option("--n", jaco.n, "order")->required();

    CompetitionArgs comp;
    auto* comp_cmd = app.add_subcommand("competition", "competition graph of a digraph");
    add_shared(comp_cmd, comp.shared);
    comp_cmd->add_option("--input", comp.input, "digraph JSON file");
    comp_cmd->add_option("--jaco", comp.jaco, "use J_n(1)");
    comp_cmd->add_flag("--closed-form", comp.closed_form, "use the closed form for C(J_n(1))");
    comp_cmd->add_flag("--check", comp.check, "compare closed form and direct for 5..n");

    GrogArgs grog;
    auto* grog_cmd = app.add_subcommand("grog", "solve or replay the Grog game");
    grog_cmd->require_subcommand(1, 1);
    auto* solve_cmd = grog_cmd->add_subcommand("solve", "exact grog number of a web");
    auto* run_cmd = grog_cmd->add_subcommand("run", "replay a strategy file");
    for (auto* sub : {solve_cmd, run_cmd}) {
        add_shared(sub, grog.shared);
        sub->add_option("--input", grog.input, "web JSON file");
        sub->add_option("--jaco", grog.jaco, "use J_n(1)");
    }
    solve_cmd->add_flag("--witness", grog.witness, "include an optimal strategy");
    run_cmd->add_option("--strategy", grog.strategy, "strategy JSON file")->required();
    run_cmd->add_flag("--require-exit", grog.require_exit, "fail unless the run reaches exit");

    EnumerateArgs en;
    auto* en_cmd = app.add_subcommand("enumerate", "webs of a base graph");
    add_shared(en_cmd, en.shared);
    en_cmd->add_option("--graph", en.graph, "path | cycle | star | complete | file")
        ->check(CLI::IsMember({"path", "cycle", "star", "complete", "file"}));
    en_cmd->add_option("--n", en.n, "order");
    en_cmd->add_option("--input", en.input, "undirected graph JSON file");
    en_cmd->add_flag("--dedup", en.dedup, "one web per automorphism class");
    en_cmd->add_flag("--distribution", en.distribution, "grog number histogram");
    en_cmd->add_option("--max-edges", en.max_edges, "edge cap");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "run the claim harness");
    add_shared(ver_cmd, ver.shared);
    ver_cmd->add_option("--claim", ver.claim, "claim id");
    ver_cmd->add_flag("--all", ver.all, "every claim");
    ver_cmd->add_option("--n-max", ver.n_max, "order cap for every family");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (jaco_cmd->parsed()) return cmd_jaco(jaco, out);
        if (comp_cmd->parsed()) return cmd_competition(comp, out);
        if (solve_cmd->parsed()) return cmd_grog_solve(grog, out);
        if (run_cmd->parsed()) return cmd_grog_run(grog, out);
        if (en_cmd->parsed()) return cmd_enumerate(en, out);
        if (ver_cmd->parsed()) return cmd_verify(ver, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::illegal_move ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace jgrog
