#pragma once

#include <vector>

#include "jgrog/graph.hpp"

namespace jgrog {

struct CompetitionGraph {
    UGraph graph;
    std::vector<int> isolated;  // ascending labels with no incident edge

    bool operator==(const CompetitionGraph&) const = default;
};

// {u, w} is an edge iff u and w share an out-neighbour (a common prey).
CompetitionGraph competition_graph(const Digraph& d);

/**
 * Closed form for C(J_n(1)), n >= 5: the subgraph of the underlying graph
 * induced by {v_3..v_{n-1}}, minus each edge {v_i, v_{m_i}} with
 * m_i = i + d^+(v_i), 3 <= i <= n-2, plus v_1, v_2, v_n as isolated vertices.
 * Deletions whose m_i falls outside {3..n-1} are no-ops.
 */
CompetitionGraph jaco_competition_closed_form(int n);

struct ClosedFormCheck {
    int n = 0;
    bool equal = false;
    std::vector<Edge> missing;  // in the direct computation, absent from the closed form
    std::vector<Edge> extra;    // in the closed form, absent from the direct computation
};

// Compares the closed form against competition_graph(build_jaco(n)) for 5 <= n <= n_max.
std::vector<ClosedFormCheck> check_jaco_competition(int n_max);

}  // namespace jgrog
