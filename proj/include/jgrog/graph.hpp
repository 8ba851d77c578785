#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jgrog {

// Vertices are 1-based labels v_1..v_n throughout the library.

struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

// Undirected edge, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

/**
 * Labelled simple digraph. Arcs are kept sorted by (tail, head); no self-loops,
 * no duplicates and never both (u,v) and (v,u).
 */
class Digraph {
public:
    Digraph() = default;

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(int tail, int head) const;
    // Position of the arc in arcs(), if present.
    std::optional<std::size_t> find_arc(int tail, int head) const;

    std::vector<int> in_degrees() const;   // index 0 unused
    std::vector<int> out_degrees() const;  // index 0 unused

    bool operator==(const Digraph&) const = default;

private:
    friend Digraph make_digraph(int n, std::vector<Arc> arcs);

    int n_ = 0;
    std::vector<Arc> arcs_;
};

class UGraph {
public:
    UGraph() = default;

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;  // index 0 unused
    std::vector<std::vector<int>> adjacency() const;  // index 0 unused

    bool operator==(const UGraph&) const = default;

private:
    friend UGraph make_ugraph(int n, std::vector<Edge> edges);

    int n_ = 0;
    std::vector<Edge> edges_;
};

// Throws Error(invalid_graph) on self-loops, duplicates, anti-parallel pairs or
// indices outside 1..n.
Digraph make_digraph(int n, std::vector<Arc> arcs);
Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

// Edges may be given in either endpoint order; {u,v} and {v,u} count as duplicates.
UGraph make_ugraph(int n, std::vector<Edge> edges);
UGraph make_ugraph(int n, const std::vector<std::pair<int, int>>& edges);

UGraph underlying(const Digraph& d);

bool is_connected(const UGraph& g);

inline constexpr int default_max_orientation_edges = 20;
inline constexpr int default_max_indexing_order = 8;

/**
 * All 2^e orientations of a graph. Orientation k directs edge j (edges sorted)
 * from its smaller endpoint to its larger one when bit j of k is clear, and
 * the other way round when it is set. Iteration order is k = 0, 1, 2, ...
 */
class Orientations {
public:
    explicit Orientations(const UGraph& g, int max_edges = default_max_orientation_edges);

    std::uint64_t size() const noexcept { return std::uint64_t{1} << graph_.size(); }
    Digraph operator[](std::uint64_t bits) const;

    class iterator {
    public:
        using value_type = Digraph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const Orientations* owner, std::uint64_t pos) : owner_(owner), pos_(pos) {}

        Digraph operator*() const { return (*owner_)[pos_]; }
        iterator& operator++() { ++pos_; return *this; }
        iterator operator++(int) { auto old = *this; ++pos_; return old; }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        const Orientations* owner_ = nullptr;
        std::uint64_t pos_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    UGraph graph_;
};

Orientations orientations(const UGraph& g, int max_edges = default_max_orientation_edges);

// labels[p - 1] is the label given to structural position p.
struct Indexing {
    std::vector<int> labels;

    int order() const noexcept { return static_cast<int>(labels.size()); }
    int operator()(int position) const { return labels[position - 1]; }
    auto operator<=>(const Indexing&) const = default;
};

std::uint64_t factorial(int n);

// The n! permutations of 1..n in lexicographic order.
class Indexings {
public:
    explicit Indexings(int n, int max_n = default_max_indexing_order);

    int order() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return factorial(n_); }
    // Lexicographic unranking.
    Indexing operator[](std::uint64_t rank) const;

    class iterator {
    public:
        using value_type = Indexing;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(Indexing current, bool done) : current_(std::move(current)), done_(done) {}

        const Indexing& operator*() const { return current_; }
        iterator& operator++();
        iterator operator++(int) { auto old = *this; ++*this; return old; }
        bool operator==(const iterator& o) const {
            return done_ == o.done_ && (done_ || current_ == o.current_);
        }

    private:
        Indexing current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return {}; }

private:
    int n_;
};

Indexings indexings(int n, int max_n = default_max_indexing_order);

// Relabels a digraph on positions 1..n into one on labels: arc (p, q) becomes
// (labels(p), labels(q)).
Digraph relabel(const Digraph& d, const Indexing& labels);

}  // namespace jgrog
