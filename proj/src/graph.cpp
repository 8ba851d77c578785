#include "jgrog/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "jgrog/error.hpp"

namespace jgrog {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_graph: return "invalid graph";
        case ErrorKind::cap_exceeded: return "cap exceeded";
        case ErrorKind::out_of_domain: return "out of domain";
        case ErrorKind::illegal_move: return "illegal move";
        case ErrorKind::parse: return "parse error";
        case ErrorKind::internal: return "internal error";
    }
    return "error";
}

namespace {

std::string arc_text(int a, int b, const char* sep) {
    return "(" + std::to_string(a) + sep + std::to_string(b) + ")";
}

void check_order(int n) {
    if (n < 0) throw Error(ErrorKind::invalid_graph, "negative vertex count");
}

void check_vertex(int n, int v) {
    if (v < 1 || v > n)
        throw Error(ErrorKind::invalid_graph,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

}  // namespace

bool Digraph::has_arc(int tail, int head) const {
    return find_arc(tail, head).has_value();
}

std::optional<std::size_t> Digraph::find_arc(int tail, int head) const {
    const Arc key{tail, head};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
    if (it == arcs_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - arcs_.begin());
}

std::vector<int> Digraph::in_degrees() const {
    std::vector<int> deg(n_ + 1, 0);
    for (const auto& a : arcs_) ++deg[a.head];
    return deg;
}

std::vector<int> Digraph::out_degrees() const {
    std::vector<int> deg(n_ + 1, 0);
    for (const auto& a : arcs_) ++deg[a.tail];
    return deg;
}

Digraph make_digraph(int n, std::vector<Arc> arcs) {
    check_order(n);
    for (const auto& a : arcs) {
        check_vertex(n, a.tail);
        check_vertex(n, a.head);
        if (a.tail == a.head)
            throw Error(ErrorKind::invalid_graph, "self-loop at vertex " + std::to_string(a.tail));
    }
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t k = 1; k < arcs.size(); ++k) {
        if (arcs[k] == arcs[k - 1])
            throw Error(ErrorKind::invalid_graph,
                        "duplicate arc " + arc_text(arcs[k].tail, arcs[k].head, ","));
    }
    for (const auto& a : arcs) {
        if (a.tail < a.head && std::binary_search(arcs.begin(), arcs.end(), Arc{a.head, a.tail}))
            throw Error(ErrorKind::invalid_graph,
                        "anti-parallel pair " + arc_text(a.tail, a.head, ",") + " and " +
                            arc_text(a.head, a.tail, ","));
    }
    Digraph d;
    d.n_ = n;
    d.arcs_ = std::move(arcs);
    return d;
}

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (auto [t, h] : arcs) out.push_back({t, h});
    return make_digraph(n, std::move(out));
}

bool UGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> UGraph::degrees() const {
    std::vector<int> deg(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<std::vector<int>> UGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

UGraph make_ugraph(int n, std::vector<Edge> edges) {
    check_order(n);
    for (auto& e : edges) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v)
            throw Error(ErrorKind::invalid_graph, "self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (edges[k] == edges[k - 1])
            throw Error(ErrorKind::invalid_graph,
                        "duplicate edge " + arc_text(edges[k].u, edges[k].v, ","));
    }
    UGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
}

UGraph make_ugraph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) out.push_back({u, v});
    return make_ugraph(n, std::move(out));
}

UGraph underlying(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(d.size());
    for (const auto& a : d.arcs()) edges.push_back({a.tail, a.head});
    return make_ugraph(d.order(), std::move(edges));
}

bool is_connected(const UGraph& g) {
    const int n = g.order();
    if (n == 0) return false;
    // union-find
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (const auto& e : g.edges()) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

Orientations::Orientations(const UGraph& g, int max_edges) : graph_(g) {
    if (max_edges > 62) max_edges = 62;
    if (static_cast<long long>(g.size()) > max_edges)
        throw Error(ErrorKind::cap_exceeded,
                    "orientation enumeration refused: " + std::to_string(g.size()) +
                        " edges exceeds cap " + std::to_string(max_edges));
}

Digraph Orientations::operator[](std::uint64_t bits) const {
    std::vector<Arc> arcs;
    arcs.reserve(graph_.size());
    const auto& edges = graph_.edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
        if ((bits >> j) & 1U)
            arcs.push_back({edges[j].v, edges[j].u});
        else
            arcs.push_back({edges[j].u, edges[j].v});
    }
    return make_digraph(graph_.order(), std::move(arcs));
}

Orientations orientations(const UGraph& g, int max_edges) {
    return Orientations(g, max_edges);
}

std::uint64_t factorial(int n) {
    if (n > 20) throw Error(ErrorKind::cap_exceeded, "factorial overflows 64 bits");
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

Indexings::Indexings(int n, int max_n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::out_of_domain, "indexings need n >= 1");
    if (n > max_n)
        throw Error(ErrorKind::cap_exceeded,
                    "indexing enumeration refused: n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_n));
}

Indexing Indexings::operator[](std::uint64_t rank) const {
    std::vector<int> pool(n_);
    std::iota(pool.begin(), pool.end(), 1);
    Indexing out;
    out.labels.reserve(n_);
    for (int k = n_; k >= 1; --k) {
        const std::uint64_t block = factorial(k - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.labels.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

Indexings::iterator& Indexings::iterator::operator++() {
    done_ = !std::next_permutation(current_.labels.begin(), current_.labels.end());
    return *this;
}

Indexings::iterator Indexings::begin() const {
    Indexing first;
    first.labels.resize(n_);
    std::iota(first.labels.begin(), first.labels.end(), 1);
    return {std::move(first), false};
}

Indexings indexings(int n, int max_n) { return Indexings(n, max_n); }

Digraph relabel(const Digraph& d, const Indexing& labels) {
    if (labels.order() != d.order())
        throw Error(ErrorKind::invalid_graph, "indexing order does not match graph order");
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const auto& a : d.arcs()) arcs.push_back({labels(a.tail), labels(a.head)});
    return make_digraph(d.order(), std::move(arcs));
}

}  // namespace jgrog
