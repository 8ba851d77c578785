#include "jgrog/competition.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "jgrog/error.hpp"
#include "jgrog/jaco.hpp"

namespace jgrog {

namespace {

CompetitionGraph finish(int n, std::set<Edge> edges) {
    CompetitionGraph out;
    out.graph = make_ugraph(n, std::vector<Edge>(edges.begin(), edges.end()));
    const auto deg = out.graph.degrees();
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 0) out.isolated.push_back(v);
    return out;
}

}  // namespace

CompetitionGraph competition_graph(const Digraph& d) {
    const int n = d.order();
    std::vector<std::vector<int>> predators(n + 1);
    for (const auto& a : d.arcs()) predators[a.head].push_back(a.tail);

    std::set<Edge> edges;
    for (int z = 1; z <= n; ++z) {
        const auto& in = predators[z];
        for (std::size_t x = 0; x < in.size(); ++x)
            for (std::size_t y = x + 1; y < in.size(); ++y)
                edges.insert({std::min(in[x], in[y]), std::max(in[x], in[y])});
    }
    return finish(n, std::move(edges));
}

CompetitionGraph jaco_competition_closed_form(int n) {
    if (n < 5)
        throw Error(ErrorKind::out_of_domain,
                    "closed form needs n >= 5, got " + std::to_string(n));
    const auto jaco = build_jaco(n);
    auto inside = [n](int v) { return v >= 3 && v <= n - 1; };

    std::set<Edge> edges;
    for (const auto& a : jaco.digraph.arcs())
        if (inside(a.tail) && inside(a.head)) edges.insert({a.tail, a.head});

    for (int i = 3; i <= n - 2; ++i) {
        const int m = i + jaco.out_deg[i];
        if (inside(m)) edges.erase({std::min(i, m), std::max(i, m)});
    }
    return finish(n, std::move(edges));
}

std::vector<ClosedFormCheck> check_jaco_competition(int n_max) {
    if (n_max < 5)
        throw Error(ErrorKind::out_of_domain,
                    "closed-form check needs n_max >= 5, got " + std::to_string(n_max));
    std::vector<ClosedFormCheck> out;
    for (int n = 5; n <= n_max; ++n) {
        const auto direct = competition_graph(build_jaco(n).digraph);
        const auto closed = jaco_competition_closed_form(n);
        ClosedFormCheck row;
        row.n = n;
        const auto& de = direct.graph.edges();
        const auto& ce = closed.graph.edges();
        std::set_difference(de.begin(), de.end(), ce.begin(), ce.end(),
                            std::back_inserter(row.missing));
        std::set_difference(ce.begin(), ce.end(), de.begin(), de.end(),
                            std::back_inserter(row.extra));
        row.equal = row.missing.empty() && row.extra.empty() && direct.isolated == closed.isolated;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace jgrog
