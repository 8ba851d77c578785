#pragma once

#include <optional>
#include <vector>

#include "jgrog/graph.hpp"

namespace jgrog {

inline constexpr int default_max_jaco_order = 10'000;

/**
 * Finite Jaco graph J_n(1).
 *
 * Arc (v_i, v_j), i < j, is present iff 2i - d^-(v_i) >= j, with in-degrees
 * taken in the unbounded construction. Degree vectors are indexed by label
 * (index 0 unused) and refer to the truncated graph.
 */
struct JacoGraph {
    int n = 0;
    Digraph digraph;
    std::vector<int> in_deg;
    std::vector<int> out_deg;
    // Index i of the Jaconian vertex; empty for n = 1.
    std::optional<int> jaconian;
};

JacoGraph build_jaco(int n, int max_n = default_max_jaco_order);

/**
 * In-degrees of v_1..v_n in J_n(1) (index 0 unused), computed without
 * materializing arcs. Truncation never changes the in-degree of a kept vertex.
 */
std::vector<int> jaco_in_degrees(int n);

/**
 * i = n - d^-(v_{n+1}) in J_{n+1}(1): the largest index whose vertex has no arc
 * to v_{n+1}. Throws Error(internal) if i + d^+(v_i) is not n-1 or n, or if
 * 2i - n < 0.
 */
int jaconian_vertex(int n, int max_n = default_max_jaco_order);

// Vertices of maximum total degree in J_n(1), ascending.
std::vector<int> jaco_max_degree_vertices(const JacoGraph& j);

}  // namespace jgrog
