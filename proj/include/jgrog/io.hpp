#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "jgrog/competition.hpp"
#include "jgrog/graph.hpp"
#include "jgrog/grog.hpp"
#include "jgrog/jaco.hpp"

namespace jgrog {

// Insertion-ordered so that files read {"n": ..., "arcs": ...} in that order.
using Json = nlohmann::ordered_json;

Json to_json(const Digraph& d);             // {"n", "arcs": [[tail, head], ...]}
Json to_json(const UGraph& g);              // {"n", "edges": [[u, v], ...]}
Json to_json(const JacoGraph& j);           // digraph fields + "jaconian"
Json to_json(const CompetitionGraph& c);    // ugraph fields + "isolated"
Json to_json(const Strategy& s);            // [{"predator", "prey": [...]}, ...]
Json to_json(const RunResult& r);
Json to_json(const SolveResult& r, bool with_witness);

// All parsers throw Error(parse) on malformed documents and Error(invalid_graph)
// on well-formed documents describing an invalid graph.
Digraph parse_digraph(std::string_view text);
UGraph parse_ugraph(std::string_view text);
Strategy parse_strategy(std::string_view text);

// Vertex names are bare integers; vertices with no incident arc or edge are
// listed on their own so the vertex set survives the round trip.
std::string to_dot(const Digraph& d);
std::string to_dot(const UGraph& g);

// Header "residual,count", one row per key in ascending order.
std::string distribution_csv(const std::map<long long, std::uint64_t>& dist);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace jgrog
