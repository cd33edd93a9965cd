#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/cuts.hpp"
#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg {

enum class BraceMethod { tight_cut_free, two_extendable, neighborhood, all };

/// Why a graph failed the brace test: at most one witness kind is set.
struct BraceDisqualifier {
    std::string reason;
    std::optional<Shore> tight_cut;  // a nontrivial tight cut
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>>
        edge_pair;                          // disjoint edges in no common matching
    std::optional<VertexSet> violating_set; // X with |N(X)| < |X| + 2
};

struct BraceVerdict {
    bool is_brace = false;
    std::optional<bool> tight_cut_free;
    std::optional<bool> two_extendable;
    std::optional<bool> neighborhood;
    std::optional<BraceDisqualifier> disqualifier;
};

namespace detail {

inline bool brace_tight_cut_free(const BipartiteGraph& g, BraceVerdict& v) {
    CoverageReport cov = is_matching_covered(g);
    if (!cov.covered) {
        v.disqualifier = BraceDisqualifier{"not matching covered", {}, {}, {}};
        return false;
    }
    bool ok = true;
    for_each_odd_shore(g.order(), [&](const Shore& x) {
        if (!ok || x.is_trivial()) return;
        if (tight_bipartite_unchecked(g, x)) {
            ok = false;
            v.disqualifier = BraceDisqualifier{"nontrivial tight cut", x, {}, {}};
        }
    });
    return ok;
}

inline bool brace_two_extendable(const BipartiteGraph& g, BraceVerdict& v) {
    if (!is_connected(g)) {
        v.disqualifier = BraceDisqualifier{"not connected", {}, {}, {}};
        return false;
    }
    if (!has_perfect_matching(g)) {
        v.disqualifier = BraceDisqualifier{"no perfect matching", {}, {}, {}};
        return false;
    }
    for (int i = 0; i < g.size(); ++i) {
        auto [u1, v1] = g.endpoints(i);
        for (int j = i + 1; j < g.size(); ++j) {
            auto [u2, v2] = g.endpoints(j);
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            VertexSet rest = g.vertex_set() - VertexSet::single(u1) -
                             VertexSet::single(v1) - VertexSet::single(u2) -
                             VertexSet::single(v2);
            if (!has_pm_on(g, rest)) {
                v.disqualifier = BraceDisqualifier{
                    "disjoint edge pair extends to no perfect matching", {},
                    std::make_pair(std::make_pair(u1, v1), std::make_pair(u2, v2)), {}};
                return false;
            }
        }
    }
    return true;
}

inline bool brace_neighborhood(const BipartiteGraph& g, BraceVerdict& v) {
    if (g.part_a_size() > 20 || g.part_b_size() > 20)
        throw resource_error("brace.part_cap=20",
                             "neighborhood method enumerates 2^|A| subsets");
    if (!is_matching_covered(g).covered) {
        v.disqualifier = BraceDisqualifier{"not matching covered", {}, {}, {}};
        return false;
    }
    auto side = [&](VertexSet part) -> std::optional<VertexSet> {
        std::vector<int> verts = part.to_vector();
        const int k = static_cast<int>(verts.size());
        for (std::uint64_t s = 1; s < (1ULL << k); ++s) {
            int sz = __builtin_popcountll(s);
            if (sz < 1 || sz > k - 2) continue;
            VertexSet x;
            for (int i = 0; i < k; ++i)
                if ((s >> i) & 1) x.set(verts[static_cast<std::size_t>(i)]);
            if (neighborhood(g, x).count() < sz + 2) return x;
        }
        return std::nullopt;
    };
    if (auto x = side(g.part_a_set())) {
        v.disqualifier = BraceDisqualifier{"|N(X)| < |X| + 2", {}, {}, *x};
        return false;
    }
    if (auto x = side(g.part_b_set())) {
        v.disqualifier = BraceDisqualifier{"|N(X)| < |X| + 2", {}, {}, *x};
        return false;
    }
    return true;
}

inline bool is_path4(const BipartiteGraph& g) {
    if (g.order() != 4 || g.size() != 3 || !is_connected(g)) return false;
    std::vector<int> d = degree_profile(g).degree;
    std::sort(d.begin(), d.end());
    return d == std::vector<int>{1, 1, 2, 2};
}

} // namespace detail

/// Brace recognition. `tight_cut_free` applies from n = 4 (C4 is the minimum
/// brace); the 2-extendability and neighborhood characterizations require at
/// least six vertices and may only be requested then. The path of length
/// three is excluded by definition.
inline BraceVerdict is_brace(const BipartiteGraph& g,
                             BraceMethod method = BraceMethod::all) {
    const bool big = g.order() >= 6;
    if ((method == BraceMethod::two_extendable || method == BraceMethod::neighborhood) &&
        !big)
        throw input_error("this brace characterization requires at least six vertices");

    BraceVerdict v;
    if (detail::is_path4(g)) {
        v.disqualifier =
            BraceDisqualifier{"the path of length three is excluded from braces", {}, {}, {}};
        if (method == BraceMethod::tight_cut_free || method == BraceMethod::all)
            v.tight_cut_free = false;
        return v;
    }
    if (g.order() < 4) {
        v.disqualifier = BraceDisqualifier{"braces have at least four vertices", {}, {}, {}};
        if (method == BraceMethod::tight_cut_free || method == BraceMethod::all)
            v.tight_cut_free = false;
        return v;
    }

    switch (method) {
    case BraceMethod::tight_cut_free:
        v.tight_cut_free = detail::brace_tight_cut_free(g, v);
        v.is_brace = *v.tight_cut_free;
        return v;
    case BraceMethod::two_extendable:
        v.two_extendable = detail::brace_two_extendable(g, v);
        v.is_brace = *v.two_extendable;
        return v;
    case BraceMethod::neighborhood:
        v.neighborhood = detail::brace_neighborhood(g, v);
        v.is_brace = *v.neighborhood;
        return v;
    case BraceMethod::all:
        break;
    }

    v.tight_cut_free = detail::brace_tight_cut_free(g, v);
    if (big) {
        BraceVerdict v2, v3;
        v.two_extendable = detail::brace_two_extendable(g, v2);
        v.neighborhood = detail::brace_neighborhood(g, v3);
        if (*v.two_extendable != *v.tight_cut_free ||
            *v.neighborhood != *v.tight_cut_free)
            throw property_violation("brace recognition methods disagree on " +
                                     (g.name().empty() ? "input graph" : g.name()));
        if (!v.disqualifier) {
            if (v2.disqualifier) v.disqualifier = v2.disqualifier;
            else if (v3.disqualifier) v.disqualifier = v3.disqualifier;
        }
    }
    v.is_brace = *v.tight_cut_free;
    return v;
}

// ---------------------------------------------------------------------------
// Thin / nonthin edges
// ---------------------------------------------------------------------------

/// Per-edge verdict. An S-cut of G associated with e is a cut that is a
/// nontrivial tight cut of G - e with both shores of size > 3 (hence >= 5 by
/// parity); e is thin iff it has none.
struct EdgeThinness {
    int edge_id = -1;
    std::pair<int, int> endpoints;  // global (A-end, B-end)
    bool thin = true;
    std::vector<Shore> s_cuts;  // canonical representatives; empty iff thin
    bool g_minus_e_matching_covered = true;
};

namespace detail {

// S-cuts of g associated with edge `id`, as canonical shores of g.
// Tightness in g - e is decided definitionally against the full matching
// list of g - e; for matching covered g - e the bipartite characterization
// prefilters the shores and the two must agree.
inline EdgeThinness classify_edge(const BipartiteGraph& g, int id) {
    EdgeThinness t;
    t.edge_id = id;
    t.endpoints = g.endpoints(id);
    BipartiteGraph h = g.without_edge(id);
    CoverageReport cov = is_matching_covered(h);
    t.g_minus_e_matching_covered = cov.covered;

    std::vector<PerfectMatching> pms;
    if (cov.has_pm) pms = enumerate_perfect_matchings(h);
    if (pms.empty()) return t;  // no matchings: no tight cuts to report

    for_each_odd_shore(g.order(), [&](const Shore& x) {
        int k = x.count();
        if (std::min(k, g.order() - k) < 5) return;  // cannot be an S-cut
        bool tight;
        if (cov.covered) {
            if (!tight_bipartite_unchecked(h, x)) return;
            tight = true;
            for (const PerfectMatching& m : pms)
                if (m.crossings(x.members()) != 1) { tight = false; break; }
            if (!tight)
                throw property_violation(
                    "bipartite tight-cut characterization disagrees with the "
                    "definitional test");
        } else {
            tight = true;
            for (const PerfectMatching& m : pms)
                if (m.crossings(x.members()) != 1) { tight = false; break; }
        }
        if (tight) t.s_cuts.push_back(x.canonical());
    });
    t.thin = t.s_cuts.empty();
    return t;
}

inline void require_brace_at_least6(const BipartiteGraph& g) {
    if (g.order() < 6)
        throw domain_error("thin edges are defined in braces with at least six vertices");
    BraceVerdict v = is_brace(g, BraceMethod::neighborhood);
    if (!v.is_brace)
        throw domain_error("thin edges are defined in braces only");
}

} // namespace detail

/// Classify every edge of a brace (n >= 6) as thin or nonthin, with S-cut
/// witnesses for the nonthin ones, in canonical edge order.
inline std::vector<EdgeThinness> classify_edges_thin(const BipartiteGraph& g) {
    detail::require_brace_at_least6(g);
    std::vector<EdgeThinness> out;
    out.reserve(static_cast<std::size_t>(g.size()));
    for (int id = 0; id < g.size(); ++id) out.push_back(detail::classify_edge(g, id));
    return out;
}

/// One S-cut, both as the canonical {X, X-bar} representative and oriented
/// so that the shore contains the edge's A-side endpoint.
struct SCut {
    Shore cut;       // canonical representative
    Shore oriented;  // side containing the A-endpoint of the edge
};

/// All S-cuts associated with edge (a_local, b_local) of a brace. Each cut is
/// checked against the structural identity |X∩A| = |X∩B| - 1 and
/// E[X∩A, X̄∩B] = {uv} for the oriented shore.
inline std::vector<SCut> find_s_cuts(const BipartiteGraph& g, int a_local, int b_local) {
    detail::require_brace_at_least6(g);
    int id = g.edge_id(a_local, g.global_b(b_local));
    if (id < 0) throw input_error("not an edge of the graph");
    EdgeThinness t = detail::classify_edge(g, id);

    auto [p, q] = g.endpoints(id);  // p in A, q in B
    std::vector<SCut> out;
    for (const Shore& s : t.s_cuts) {
        Shore oriented = s.members().test(p) ? s : Shore(s.complement(), s.host_order());
        VertexSet xs = oriented.members();
        VertexSet xa = xs & g.part_a_set();
        VertexSet xb = xs & g.part_b_set();
        bool sizes_ok = xa.count() == xb.count() - 1;
        // E[X∩A, X̄∩B] must be exactly {pq}, in g itself.
        bool edge_ok = true;
        VertexSet cb = g.part_b_set() - xb;
        int crossing_ab = 0;
        xa.for_each([&](int u) {
            VertexSet hits = g.adjacency(u) & cb;
            crossing_ab += hits.count();
            if (hits.count() > 0 && (u != p || !(hits == VertexSet::single(q))))
                edge_ok = false;
        });
        if (crossing_ab != 1) edge_ok = false;
        if (!sizes_ok || !edge_ok)
            throw property_violation("S-cut violates the nonthin-edge cut identity");
        out.push_back(SCut{s, oriented});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural checks used by the verification layer
// ---------------------------------------------------------------------------

/// Exhaustively check, for every X ⊆ V with |X∩B| <= |B|-2 and
/// N(X∩B) ⊆ X∩A: |X∩A| = |X∩B| implies X = ∅, and |X∩A| = |X∩B|+1 implies
/// X∩B = ∅. True iff no violation.
inline bool verify_cor1(const BipartiteGraph& g, int vertex_cap = 16) {
    if (g.order() > vertex_cap)
        throw resource_error("cor1.vertex_cap=" + std::to_string(vertex_cap),
                             "subset enumeration needs 2^n work");
    if (!is_brace(g).is_brace)
        throw domain_error("the corollary is a statement about braces");
    const int a = g.part_a_size(), b = g.part_b_size();
    std::vector<int> bs = g.part_b_set().to_vector();
    for (std::uint64_t sb = 0; sb < (1ULL << b); ++sb) {
        if (__builtin_popcountll(sb) > b - 2) continue;
        VertexSet xb;
        for (int i = 0; i < b; ++i)
            if ((sb >> i) & 1) xb.set(bs[static_cast<std::size_t>(i)]);
        VertexSet nb = neighborhood(g, xb);
        for (std::uint64_t sa = 0; sa < (1ULL << a); ++sa) {
            VertexSet xa(sa);  // part A occupies indices 0..a-1
            if (!nb.subset_of(xa)) continue;
            int ca = xa.count(), cb = xb.count();
            if (ca == cb && (ca != 0 || cb != 0)) return false;
            if (ca == cb + 1 && cb != 0) return false;
        }
    }
    return true;
}

/// The graph spanned by the nonthin edges with both endpoints of degree >= 4.
struct S1NonthinSubgraph {
    VertexSet s1;  // vertices of degree >= 4
    std::vector<std::pair<int, int>> edges;
    bool is_forest = true;
};

inline S1NonthinSubgraph s1_nonthin_subgraph(const BipartiteGraph& g,
                                             const std::vector<EdgeThinness>& thinness) {
    S1NonthinSubgraph out;
    DegreeProfile prof = degree_profile(g);
    for (int v = 0; v < g.order(); ++v)
        if (prof.degree[static_cast<std::size_t>(v)] >= 4) out.s1.set(v);
    for (const EdgeThinness& t : thinness) {
        auto [u, v] = t.endpoints;
        if (!t.thin && out.s1.test(u) && out.s1.test(v)) out.edges.push_back({u, v});
    }
    // Union-find cycle test.
    std::vector<int> root(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) root[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v) v = root[static_cast<std::size_t>(v)];
        return v;
    };
    for (auto [u, v] : out.edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv) {
            out.is_forest = false;
            break;
        }
        root[static_cast<std::size_t>(ru)] = rv;
    }
    return out;
}

inline S1NonthinSubgraph s1_nonthin_subgraph(const BipartiteGraph& g) {
    return s1_nonthin_subgraph(g, classify_edges_thin(g));
}

/// Diagnostic sweep for the two-S-cut intersection property: for every
/// vertex u of degree >= 4 incident with two nonthin edges and every pair of
/// their S-cuts, oriented so u lies in both shores, report the pair whenever
/// |X̄ ∩ Ȳ| > 1. Returned, never thrown: the orientation convention is not
/// pinned down enough to make this a hard assertion.
struct Lemma8Flag {
    int vertex;
    std::pair<int, int> edge1, edge2;
    Shore cut1, cut2;
    int intersection;
};

inline std::vector<Lemma8Flag>
helu_lemma8_scan(const BipartiteGraph& g, const std::vector<EdgeThinness>& thinness) {
    std::vector<Lemma8Flag> flags;
    DegreeProfile prof = degree_profile(g);
    for (int u = 0; u < g.order(); ++u) {
        if (prof.degree[static_cast<std::size_t>(u)] < 4) continue;
        std::vector<const EdgeThinness*> at_u;
        for (const EdgeThinness& t : thinness)
            if (!t.thin && (t.endpoints.first == u || t.endpoints.second == u))
                at_u.push_back(&t);
        for (std::size_t i = 0; i < at_u.size(); ++i) {
            for (std::size_t j = i + 1; j < at_u.size(); ++j) {
                for (const Shore& x : at_u[i]->s_cuts) {
                    Shore xo = x.members().test(u) ? x : Shore(x.complement(), x.host_order());
                    for (const Shore& y : at_u[j]->s_cuts) {
                        Shore yo =
                            y.members().test(u) ? y : Shore(y.complement(), y.host_order());
                        int inter = (xo.complement() & yo.complement()).count();
                        if (inter > 1)
                            flags.push_back(Lemma8Flag{u, at_u[i]->endpoints,
                                                       at_u[j]->endpoints, xo, yo, inter});
                    }
                }
            }
        }
    }
    return flags;
}

} // namespace mcg
