#include "jgrog/jaco.hpp"

#include <algorithm>
#include <string>

#include "jgrog/error.hpp"

namespace jgrog {

namespace {

void check_jaco_order(int n, int min_n, int max_n) {
    if (n < min_n)
        throw Error(ErrorKind::out_of_domain,
                    "Jaco order must be >= " + std::to_string(min_n) + ", got " + std::to_string(n));
    if (n > max_n)
        throw Error(ErrorKind::cap_exceeded,
                    "Jaco order " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
}

// Reach of v_i: the largest head index v_i arcs to in the unbounded graph.
int reach(int i, const std::vector<int>& in_deg) { return 2 * i - in_deg[i]; }

int truncated_out_degree(int i, int n, const std::vector<int>& in_deg) {
    return std::max(0, std::min(n, reach(i, in_deg)) - i);
}

}  // namespace

std::vector<int> jaco_in_degrees(int n) {
    std::vector<int> in_deg(std::max(n, 0) + 1, 0);
    for (int j = 2; j <= n; ++j) {
        int count = 0;
        for (int i = 1; i < j; ++i)
            if (reach(i, in_deg) >= j) ++count;
        in_deg[j] = count;
    }
    return in_deg;
}

JacoGraph build_jaco(int n, int max_n) {
    check_jaco_order(n, 1, max_n);

    // Construct up to n+1 so the Jaconian vertex comes from the same pass.
    const int m = n + 1;
    std::vector<int> in_deg(m + 1, 0);
    std::vector<Arc> arcs;
    int into_next = 0;
    for (int j = 2; j <= m; ++j) {
        for (int i = 1; i < j; ++i) {
            if (reach(i, in_deg) < j) continue;
            ++in_deg[j];
            if (j <= n)
                arcs.push_back({i, j});
            else
                ++into_next;
        }
    }

    JacoGraph out;
    out.n = n;
    out.digraph = make_digraph(n, std::move(arcs));
    out.in_deg = out.digraph.in_degrees();
    out.out_deg = out.digraph.out_degrees();
    if (n >= 2) out.jaconian = n - into_next;
    return out;
}

int jaconian_vertex(int n, int max_n) {
    check_jaco_order(n, 2, max_n);
    const auto in_deg = jaco_in_degrees(n + 1);
    const int i = n - in_deg[n + 1];

    const int span = i + truncated_out_degree(i, n, in_deg);
    if (i < 1 || (span != n - 1 && span != n) || 2 * i - n < 0)
        throw Error(ErrorKind::internal,
                    "Jaconian vertex v_" + std::to_string(i) + " of J_" + std::to_string(n) +
                        "(1) fails i + d+(v_i) in {n-1, n} or 2i - n >= 0");
    return i;
}

std::vector<int> jaco_max_degree_vertices(const JacoGraph& j) {
    int best = -1;
    std::vector<int> out;
    for (int v = 1; v <= j.n; ++v) {
        const int d = j.in_deg[v] + j.out_deg[v];
        if (d > best) {
            best = d;
            out.clear();
        }
        if (d == best) out.push_back(v);
    }
    return out;
}

}  // namespace jgrog
