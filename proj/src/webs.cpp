#include "jgrog/webs.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "jgrog/error.hpp"

namespace jgrog {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::out_of_domain, what);
}

// Automorphisms act freely on labellings (only the identity fixes a label
// sequence), so the orbit minimum of (labels, orientation) is decided by the
// labels alone and every orientation of a canonical labelling is canonical.
class Canonicalizer {
public:
    Canonicalizer(const UGraph& g, int max_n) : autos_(automorphisms(g, max_n)) {}

    bool is_canonical(const Indexing& labels) const {
        const int n = labels.order();
        std::vector<int> image(n);
        for (std::size_t a = 1; a < autos_.size(); ++a) {
            for (int p = 1; p <= n; ++p) image[autos_[a](p) - 1] = labels(p);
            if (image < labels.labels) return false;
        }
        return true;
    }

private:
    std::vector<Indexing> autos_;
};

}  // namespace

UGraph path_graph(int n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
    return make_ugraph(n, std::move(edges));
}

UGraph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, n});
    return make_ugraph(n, std::move(edges));
}

UGraph star_graph(int n) {
    require(n >= 2, "star needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) edges.push_back({1, v});
    return make_ugraph(n, std::move(edges));
}

UGraph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return make_ugraph(n, std::move(edges));
}

std::vector<Indexing> automorphisms(const UGraph& g, int max_n) {
    std::vector<Indexing> out;
    if (g.order() == 0) return out;
    for (const auto& sigma : indexings(g.order(), max_n)) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            if (!g.has_edge(sigma(e.u), sigma(e.v))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(sigma);
    }
    return out;
}

void for_each_web(const UGraph& g, const EnumerateOptions& options,
                  const std::function<void(const EnumeratedWeb&)>& visit) {
    if (g.order() > options.max_n)
        throw Error(ErrorKind::cap_exceeded, "web enumeration refused: n = " +
                                                 std::to_string(g.order()) + " exceeds cap " +
                                                 std::to_string(options.max_n));
    if (static_cast<long long>(g.size()) > options.max_edges)
        throw Error(ErrorKind::cap_exceeded, "web enumeration refused: " +
                                                 std::to_string(g.size()) +
                                                 " edges exceeds cap " +
                                                 std::to_string(options.max_edges));
    if (!is_connected(g))
        throw Error(ErrorKind::out_of_domain, "web enumeration needs a connected base graph");

    const Orientations orients(g, options.max_edges);
    std::optional<Canonicalizer> canon;
    if (options.dedup) canon.emplace(g, options.max_n);

    for (const auto& labels : indexings(g.order(), options.max_n)) {
        if (canon && !canon->is_canonical(labels)) continue;
        for (std::uint64_t bits = 0; bits < orients.size(); ++bits) {
            EnumeratedWeb item{labels, bits, Web(relabel(orients[bits], labels))};
            visit(item);
        }
    }
}

std::vector<EnumeratedWeb> enumerate_webs(const UGraph& g, const EnumerateOptions& options) {
    std::vector<EnumeratedWeb> out;
    for_each_web(g, options, [&](const EnumeratedWeb& w) { out.push_back(w); });
    return out;
}

std::uint64_t web_count_formula(int n, int eps) {
    if (n < 0 || eps < 0) throw Error(ErrorKind::out_of_domain, "negative web count argument");
    if (eps >= 64) throw Error(ErrorKind::cap_exceeded, "web count overflows 64 bits");
    std::uint64_t total = 0;
    if (__builtin_mul_overflow(factorial(n), std::uint64_t{1} << eps, &total))
        throw Error(ErrorKind::cap_exceeded, "web count overflows 64 bits");
    return total / 2;
}

WebSurvey survey_webs(const UGraph& g, const EnumerateOptions& options, int max_arcs) {
    WebSurvey out;
    for_each_web(g, options, [&](const EnumeratedWeb& w) {
        auto solved = solve_exact(w.web, max_arcs);
        const long long grog = solved.grog;
        ++out.distribution[grog];
        if (out.webs == 0 || grog < out.min_grog) {
            out.min_grog = grog;
            out.min_web = w;
            out.min_solve = std::move(solved);
        }
        if (out.webs == 0 || grog > out.max_grog) {
            out.max_grog = grog;
            out.max_web = w;
        }
        ++out.webs;
    });
    return out;
}

GraphGrog grog_number(const UGraph& g, const EnumerateOptions& options) {
    auto survey = survey_webs(g, options);
    return {survey.min_grog, std::move(survey.min_web), std::move(survey.min_solve.witness)};
}

std::map<long long, std::uint64_t> residual_distribution(const UGraph& g,
                                                         const EnumerateOptions& options) {
    return survey_webs(g, options).distribution;
}

Web random_connected_web(std::mt19937_64& rng, int n, int max_arcs) {
    require(n >= 1, "random web needs n >= 1");
    const long long all_pairs = 1LL * n * (n - 1) / 2;
    require(max_arcs >= n - 1, "random web: max_arcs below spanning-tree size");

    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) {
        const int parent = 1 + static_cast<int>(uniform_below(rng, v - 1));
        edges.push_back({parent, v});
    }
    const long long top = std::min<long long>(max_arcs, all_pairs);
    const long long target =
        (n - 1) + static_cast<long long>(uniform_below(rng, top - (n - 1) + 1));

    std::vector<Edge> spare;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end())
                spare.push_back({u, v});
    while (static_cast<long long>(edges.size()) < target) {
        const auto k = uniform_below(rng, spare.size());
        edges.push_back(spare[k]);
        spare.erase(spare.begin() + static_cast<std::ptrdiff_t>(k));
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int k = n - 1; k > 0; --k)
        std::swap(perm[k], perm[uniform_below(rng, static_cast<std::uint64_t>(k) + 1)]);

    std::vector<Arc> arcs;
    for (const auto& e : edges) {
        int a = perm[e.u - 1], b = perm[e.v - 1];
        if (uniform_below(rng, 2)) std::swap(a, b);
        arcs.push_back({a, b});
    }
    return Web(make_digraph(n, std::move(arcs)));
}

}  // namespace jgrog
