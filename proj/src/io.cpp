#include "jgrog/io.hpp"

#include <fstream>
#include <sstream>

#include "jgrog/error.hpp"

namespace jgrog {

namespace {

Json pairs_json(const std::vector<Arc>& arcs) {
    Json out = Json::array();
    for (const auto& a : arcs) out.push_back({a.tail, a.head});
    return out;
}

Json pairs_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back({e.u, e.v});
    return out;
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
    }
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(ErrorKind::parse, std::string(what) + " must be an integer");
    return j.get<int>();
}

// Reads {"n": int, key: [[a, b], ...]}.
std::pair<int, std::vector<std::pair<int, int>>> parse_pairs(std::string_view text,
                                                             const char* key) {
    const Json doc = parse_document(text);
    if (!doc.is_object()) throw Error(ErrorKind::parse, "graph document must be an object");
    if (!doc.contains("n")) throw Error(ErrorKind::parse, "graph document lacks \"n\"");
    if (!doc.contains(key))
        throw Error(ErrorKind::parse, std::string("graph document lacks \"") + key + "\"");
    const int n = as_int(doc["n"], "\"n\"");
    const Json& list = doc[key];
    if (!list.is_array()) throw Error(ErrorKind::parse, std::string("\"") + key + "\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : list) {
        if (!item.is_array() || item.size() != 2)
            throw Error(ErrorKind::parse, std::string("each entry of \"") + key + "\" must be a pair");
        pairs.emplace_back(as_int(item[0], "vertex"), as_int(item[1], "vertex"));
    }
    return {n, std::move(pairs)};
}

void emit_lonely(std::ostringstream& os, const std::vector<int>& degree) {
    for (std::size_t v = 1; v < degree.size(); ++v)
        if (degree[v] == 0) os << "  " << v << ";\n";
}

}  // namespace

Json to_json(const Digraph& d) {
    Json out;
    out["n"] = d.order();
    out["arcs"] = pairs_json(d.arcs());
    return out;
}

Json to_json(const UGraph& g) {
    Json out;
    out["n"] = g.order();
    out["edges"] = pairs_json(g.edges());
    return out;
}

Json to_json(const JacoGraph& j) {
    Json out = to_json(j.digraph);
    out["jaconian"] = j.jaconian ? Json(*j.jaconian) : Json(nullptr);
    return out;
}

Json to_json(const CompetitionGraph& c) {
    Json out = to_json(c.graph);
    out["isolated"] = c.isolated;
    return out;
}

Json to_json(const Strategy& s) {
    Json out = Json::array();
    for (const auto& b : s) {
        Json batch;
        batch["predator"] = b.predator;
        batch["prey"] = b.prey;
        out.push_back(std::move(batch));
    }
    return out;
}

Json to_json(const RunResult& r) {
    Json out;
    out["residual"] = r.residual;
    out["predation_count"] = r.predation_count;
    out["terminal"] = r.terminal;
    out["used_arcs"] = pairs_json(r.used_arcs);
    const auto pops = r.final_state.populations();
    out["population"] = std::vector<int>(pops.begin(), pops.end());
    return out;
}

Json to_json(const SolveResult& r, bool with_witness) {
    Json out;
    out["grog"] = r.grog;
    out["max_predations"] = r.max_predations;
    out["states_explored"] = r.states_explored;
    if (with_witness) out["witness"] = to_json(r.witness);
    return out;
}

Digraph parse_digraph(std::string_view text) {
    auto [n, pairs] = parse_pairs(text, "arcs");
    return make_digraph(n, pairs);
}

UGraph parse_ugraph(std::string_view text) {
    auto [n, pairs] = parse_pairs(text, "edges");
    return make_ugraph(n, pairs);
}

Strategy parse_strategy(std::string_view text) {
    const Json doc = parse_document(text);
    if (!doc.is_array()) throw Error(ErrorKind::parse, "strategy document must be an array");
    Strategy out;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("predator") || !item.contains("prey"))
            throw Error(ErrorKind::parse, "each batch needs \"predator\" and \"prey\"");
        PredationBatch batch;
        batch.predator = as_int(item["predator"], "\"predator\"");
        if (!item["prey"].is_array()) throw Error(ErrorKind::parse, "\"prey\" must be an array");
        for (const auto& p : item["prey"]) batch.prey.push_back(as_int(p, "prey"));
        out.push_back(std::move(batch));
    }
    return out;
}

std::string to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph {\n";
    std::vector<int> degree(d.order() + 1, 0);
    for (const auto& a : d.arcs()) ++degree[a.tail], ++degree[a.head];
    emit_lonely(os, degree);
    for (const auto& a : d.arcs()) os << "  " << a.tail << " -> " << a.head << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const UGraph& g) {
    std::ostringstream os;
    os << "graph {\n";
    emit_lonely(os, g.degrees());
    for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string distribution_csv(const std::map<long long, std::uint64_t>& dist) {
    std::ostringstream os;
    os << "residual,count\n";
    for (const auto& [residual, count] : dist) os << residual << ',' << count << '\n';
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
    out << text;
}

}  // namespace jgrog
