#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "jgrog/io.hpp"

using namespace jgrog;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    write_text_file(path, text);
    return path;
}

}  // namespace

TEST_CASE("jaco subcommand") {
    const auto r = cli({"jaco", "--n", "5", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["arcs"].size() == 5);
    CHECK(j["jaconian"] == 3);
    CHECK(Json::parse(cli({"jaco", "--n", "2", "--format", "json"}).out)["arcs"] == Json::parse("[[1,2]]"));
    CHECK(cli({"jaco", "--n", "0"}).code == 2);
    CHECK(cli({"jaco", "--n", "3", "--format", "dot"}).out == "digraph {\n  1 -> 2;\n  2 -> 3;\n}\n");
    CHECK(cli({"jaco", "--n", "20", "--max-n", "10"}).code == 2);
}

TEST_CASE("competition subcommand") {
    auto j = Json::parse(cli({"competition", "--jaco", "5", "--format", "json"}).out);
    CHECK(j["edges"] == Json::parse("[[3,4]]"));
    CHECK(j["isolated"] == Json::parse("[1,2,5]"));
    j = Json::parse(cli({"competition", "--jaco", "6", "--closed-form", "--format", "json"}).out);
    CHECK(j["edges"] == Json::parse("[[3,4],[4,5]]"));
    const auto check = cli({"competition", "--jaco", "40", "--check"});
    CHECK(check.code == 0);
    CHECK(check.out == "equal\n");
    CHECK(cli({"competition", "--jaco", "4", "--closed-form"}).code == 2);

    const auto path = temp_file("jgrog_cli_comp.json", R"({"n":3,"arcs":[[1,3],[2,3]]})");
    j = Json::parse(cli({"competition", "--input", path, "--format", "json"}).out);
    CHECK(j["edges"] == Json::parse("[[1,2]]"));
    std::remove(path.c_str());
    CHECK(cli({"competition", "--input", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("grog subcommands") {
    const auto web = temp_file("jgrog_cli_web.json", R"({"n":3,"arcs":[[1,2],[2,3]]})");
    const auto empty = temp_file("jgrog_cli_empty.json", "[]");
    const auto bad = temp_file("jgrog_cli_bad.json", R"([{"predator":1,"prey":[2]},{"predator":1,"prey":[2]}])");

    auto r = cli({"grog", "solve", "--input", web, "--format", "json", "--witness"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["grog"] == 2);
    CHECK(j.contains("witness"));

    j = Json::parse(cli({"grog", "solve", "--jaco", "5", "--format", "json"}).out);
    CHECK(j["grog"] == 5);

    r = cli({"grog", "run", "--input", web, "--strategy", empty, "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["residual"] == 6);
    CHECK(cli({"grog", "run", "--input", web, "--strategy", empty, "--require-exit"}).code == 1);

    r = cli({"grog", "run", "--input", web, "--strategy", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("step 1") != std::string::npos);

    CHECK(cli({"grog", "solve", "--jaco", "14"}).code == 2);
    CHECK(cli({"grog", "solve", "--input", web, "--max-arcs", "27"}).code == 2);
    for (const auto& p : {web, empty, bad}) std::remove(p.c_str());
}

TEST_CASE("enumerate subcommand") {
    auto r = cli({"enumerate", "--graph", "path", "--n", "3", "--dedup", "--distribution"});
    CHECK(r.code == 0);
    CHECK(r.out.find("webs: 12\n") != std::string::npos);
    CHECK(r.out.find("grog: 2\n") != std::string::npos);
    CHECK(r.out.find("2,8\n4,4\n") != std::string::npos);

    r = cli({"enumerate", "--graph", "path", "--n", "3", "--dedup", "--format", "csv"});
    CHECK(r.out == "residual,count\n2,8\n4,4\n");

    const auto j = Json::parse(cli({"enumerate", "--graph", "cycle", "--n", "3", "--format", "json"}).out);
    CHECK(j["grog"] == 2);
    CHECK(cli({"enumerate", "--graph", "path", "--n", "9"}).code == 2);
    CHECK(cli({"enumerate", "--graph", "path"}).code == 2);
    CHECK(cli({"enumerate", "--graph", "tree", "--n", "3"}).code == 2);

    const auto base = temp_file("jgrog_cli_base.json", R"({"n":3,"edges":[[1,2],[2,3]]})");
    CHECK(Json::parse(cli({"enumerate", "--graph", "file", "--input", base, "--dedup", "--format", "json"}).out)["webs"] == 12);
    std::remove(base.c_str());
}

TEST_CASE("verify subcommand") {
    auto r = cli({"verify", "--claim", "cor-2.5", "--n-max", "6", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["claims"][0]["status"] == "pass");
    CHECK(j["claims"][0]["values"]["g"] == Json({2, 4, 7, 11}));
    CHECK(cli({"verify", "--claim", "nosuch"}).code == 2);
    CHECK(cli({"verify"}).code == 2);

    const auto out = (std::filesystem::temp_directory_path() / "jgrog_cli_report.json").string();
    r = cli({"verify", "--claim", "web-count", "--out", out});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(Json::parse(read_text_file(out))["status"] == "pass");
    std::remove(out.c_str());
}

TEST_CASE("usage errors and help") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"jaco"}).code == 2);
    CHECK(cli({"jaco", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(cli({"jaco", "--n", "3", "--format", "csv"}).code == 2);
    const auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}
