#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "jgrog/graph.hpp"
#include "jgrog/grog.hpp"

namespace jgrog {

UGraph path_graph(int n);      // n >= 2
UGraph cycle_graph(int n);     // n >= 3
UGraph star_graph(int n);      // n >= 2, centre at position 1
UGraph complete_graph(int n);  // n >= 1

// All automorphisms as position maps (p -> sigma(p)), identity first. Brute
// force over n! permutations.
std::vector<Indexing> automorphisms(const UGraph& g, int max_n = default_max_indexing_order);

inline constexpr int default_max_web_edges = 12;

struct EnumerateOptions {
    // Emit one web per class under the automorphism group acting on labels and
    // arc directions together.
    bool dedup = false;
    int max_n = default_max_indexing_order;
    int max_edges = default_max_web_edges;
};

// A web built from a base graph: labels give the label at each position,
// orientation is the orientation index over the base graph's sorted edges.
struct EnumeratedWeb {
    Indexing labels;
    std::uint64_t orientation = 0;
    Web web;
};

/**
 * Streams webs in (indexing, orientation) order: indexings lexicographic,
 * orientation index counting up within each. With dedup, a web is emitted
 * only if its (label sequence, orientation bits) key is the lexicographic
 * minimum of its automorphism orbit.
 *
 * Throws on a disconnected base or when n or the edge count exceed the caps.
 */
void for_each_web(const UGraph& g, const EnumerateOptions& options,
                  const std::function<void(const EnumeratedWeb&)>& visit);

std::vector<EnumeratedWeb> enumerate_webs(const UGraph& g, const EnumerateOptions& options);

// n! * 2^eps / 2, throwing Error(cap_exceeded) on 64-bit overflow.
std::uint64_t web_count_formula(int n, int eps);

struct WebSurvey {
    std::uint64_t webs = 0;
    std::map<long long, std::uint64_t> distribution;  // grog number -> web count
    long long min_grog = 0;
    long long max_grog = 0;
    EnumeratedWeb min_web;  // first web in stream order attaining min_grog
    SolveResult min_solve;
    EnumeratedWeb max_web;  // first web in stream order attaining max_grog
};

WebSurvey survey_webs(const UGraph& g, const EnumerateOptions& options,
                      int max_arcs = default_max_solver_arcs);

struct GraphGrog {
    long long grog = 0;
    EnumeratedWeb web;
    Strategy witness;
};

// Minimum grog number over every labelling and orientation of g.
GraphGrog grog_number(const UGraph& g, const EnumerateOptions& options = {.dedup = true});

// Grog number of each deduplicated web, aggregated.
std::map<long long, std::uint64_t> residual_distribution(const UGraph& g,
                                                         const EnumerateOptions& options = {
                                                             .dedup = true});

/**
 * Random connected web on n vertices with between n-1 and max_arcs arcs: a
 * random spanning tree plus random extra edges, random orientation, random
 * labelling.
 */
Web random_connected_web(std::mt19937_64& rng, int n, int max_arcs);

}  // namespace jgrog
