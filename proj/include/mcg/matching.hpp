#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Vertex cap for exhaustive perfect-matching enumeration. Worst-case counts
/// are exponential; the census never needs more than 12 vertices.
inline constexpr int kMatchingVertexCap = 24;

/// An edge set covering each vertex of the host exactly once. Endpoint pairs
/// are global vertex indices, u < v, listed in ascending order.
struct PerfectMatching {
    std::vector<std::pair<int, int>> edges;

    bool contains(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (auto [x, y] : edges)
            if (x == u && y == v) return true;
        return false;
    }

    /// |M ∩ ∂(X)|.
    int crossings(VertexSet xs) const {
        int c = 0;
        for (auto [u, v] : edges)
            if (xs.test(u) != xs.test(v)) ++c;
        return c;
    }
};

namespace detail {

// Kuhn's augmenting-path maximum matching, restricted to the vertices in
// `alive`. Returns the matching size.
struct KuhnMatcher {
    const BipartiteGraph& g;
    VertexSet alive;
    std::vector<int> partner;

    explicit KuhnMatcher(const BipartiteGraph& graph, VertexSet mask)
        : g(graph), alive(mask), partner(static_cast<std::size_t>(graph.order()), -1) {}

    // DFS from an A-vertex looking for an augmenting path.
    bool augment(int u, VertexSet& visited) {
        VertexSet nbrs = g.adjacency(u) & alive;
        bool found = false;
        nbrs.for_each([&](int w) {
            if (found || visited.test(w)) return;
            visited.set(w);
            int p = partner[static_cast<std::size_t>(w)];
            if (p == -1 || augment(p, visited)) {
                partner[static_cast<std::size_t>(w)] = u;
                partner[static_cast<std::size_t>(u)] = w;
                found = true;
            }
        });
        return found;
    }

    int run() {
        int size = 0;
        (alive & g.part_a_set()).for_each([&](int u) {
            VertexSet visited;
            if (augment(u, visited)) ++size;
        });
        return size;
    }
};

inline int bipartite_matching_size(const BipartiteGraph& g, VertexSet alive) {
    return KuhnMatcher(g, alive).run();
}

inline bool has_pm_on(const BipartiteGraph& g, VertexSet alive) {
    int na = (alive & g.part_a_set()).count();
    int nb = (alive & g.part_b_set()).count();
    if (na != nb) return false;
    return bipartite_matching_size(g, alive) == na;
}

// Exhaustive backtracking perfect-matching test on a vertex subset of a
// general multigraph, memoized by subset. Contractions of bipartite graphs
// can contain odd cycles, so no bipartite shortcut applies here.
inline bool has_pm_on(const MultiGraph& g, VertexSet alive,
                      std::unordered_map<std::uint64_t, bool>& memo) {
    if (alive.empty()) return true;
    if (alive.count() % 2 != 0) return false;
    auto it = memo.find(alive.bits());
    if (it != memo.end()) return it->second;
    int v = alive.first();
    VertexSet rest = alive - VertexSet::single(v);
    bool ok = false;
    VertexSet nbrs = g.adjacency(v) & rest;
    for (std::uint64_t b = nbrs.bits(); b && !ok; b &= b - 1) {
        int u = __builtin_ctzll(b);
        ok = has_pm_on(g, rest - VertexSet::single(u), memo);
    }
    memo.emplace(alive.bits(), ok);
    return ok;
}

} // namespace detail

inline bool has_perfect_matching(const BipartiteGraph& g) {
    if (g.order() % 2 != 0) return false;
    return detail::has_pm_on(g, g.vertex_set());
}

inline bool has_perfect_matching(const MultiGraph& g) {
    if (g.order() % 2 != 0) return false;
    std::unordered_map<std::uint64_t, bool> memo;
    return detail::has_pm_on(g, g.vertex_set(), memo);
}

namespace detail {

// Enumerate by always matching the lowest uncovered vertex to its neighbours
// in ascending order; the output is therefore sorted lexicographically by
// canonical edge order. Parallel edges are one matching choice per endpoint
// pair here (tight/separating checks depend only on which pairs are matched).
template <class G>
inline void enumerate_pms_impl(const G& g, VertexSet alive, PerfectMatching& cur,
                               std::vector<PerfectMatching>& out) {
    if (alive.empty()) {
        out.push_back(cur);
        return;
    }
    int v = alive.first();
    VertexSet rest = alive - VertexSet::single(v);
    VertexSet nbrs = g.adjacency(v) & rest;
    nbrs.for_each([&](int u) {
        cur.edges.push_back({v, u});
        enumerate_pms_impl(g, rest - VertexSet::single(u), cur, out);
        cur.edges.pop_back();
    });
}

template <class G>
inline std::vector<PerfectMatching> enumerate_pms(const G& g, int vertex_cap) {
    if (g.order() > vertex_cap)
        throw resource_error("matching.vertex_cap=" + std::to_string(vertex_cap),
                             "graph on " + std::to_string(g.order()) +
                                 " vertices exceeds the enumeration cap");
    if (g.order() % 2 != 0) return {};
    std::vector<PerfectMatching> out;
    PerfectMatching cur;
    enumerate_pms_impl(g, g.vertex_set(), cur, out);
    return out;
}

} // namespace detail

/// All perfect matchings, each exactly once, lexicographic by canonical edge
/// order. `vertex_cap` overrides the default enumeration cap.
inline std::vector<PerfectMatching>
enumerate_perfect_matchings(const BipartiteGraph& g, int vertex_cap = kMatchingVertexCap) {
    return detail::enumerate_pms(g, vertex_cap);
}

/// Multigraph variant; matchings are deduplicated by endpoint pair.
inline std::vector<PerfectMatching>
enumerate_perfect_matchings(const MultiGraph& g, int vertex_cap = kMatchingVertexCap) {
    return detail::enumerate_pms(g, vertex_cap);
}

/// Outcome of the matching-covered test. A matching covered graph is
/// connected and every edge lies in some perfect matching.
struct CoverageReport {
    bool covered = false;
    bool connected = false;
    bool has_pm = false;
    /// Endpoint pairs of edges lying in no perfect matching. When the graph
    /// has no perfect matching at all, every edge is listed.
    std::vector<std::pair<int, int>> uncovered_edges;
};

inline CoverageReport is_matching_covered(const BipartiteGraph& g) {
    CoverageReport r;
    r.connected = is_connected(g);
    r.has_pm = has_perfect_matching(g);
    for (int id = 0; id < g.size(); ++id) {
        auto [u, v] = g.endpoints(id);
        // e = uv is covered iff g - {u, v} has a perfect matching.
        if (!r.has_pm ||
            !detail::has_pm_on(g, g.vertex_set() - VertexSet::single(u) -
                                      VertexSet::single(v)))
            r.uncovered_edges.push_back({u, v});
    }
    r.covered = r.connected && r.has_pm && r.uncovered_edges.empty();
    return r;
}

inline CoverageReport is_matching_covered(const MultiGraph& g) {
    CoverageReport r;
    r.connected = is_connected(g);
    std::unordered_map<std::uint64_t, bool> memo;
    r.has_pm = g.order() % 2 == 0 && detail::has_pm_on(g, g.vertex_set(), memo);
    for (const auto& e : g.edges()) {
        if (!r.has_pm ||
            !detail::has_pm_on(g,
                               g.vertex_set() - VertexSet::single(e.u) -
                                   VertexSet::single(e.v),
                               memo))
            r.uncovered_edges.push_back({e.u, e.v});
    }
    r.covered = r.connected && r.has_pm && r.uncovered_edges.empty();
    return r;
}

} // namespace mcg
