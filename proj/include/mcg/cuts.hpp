#pragma once

#include <vector>

#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg {

/// Subset-enumeration cap for odd-shore sweeps (2^(n-1) subsets).
inline constexpr int kShoreEnumCap = 26;

/// Visit every unordered {X, X-bar} pair with |X| odd exactly once,
/// represented by the shore containing vertex 0, in ascending bitmask order.
template <class F>
inline void for_each_odd_shore(int order, F&& f) {
    if (order < 2) return;
    const std::uint64_t limit = 1ULL << (order - 1);
    for (std::uint64_t s = 0; s < limit; ++s) {
        VertexSet x((s << 1) | 1ULL);
        if (x.count() % 2 == 1) f(Shore(x, order));
    }
}

template <class G>
inline std::vector<Shore> enumerate_odd_shores(const G& g, int cap = kShoreEnumCap) {
    if (g.order() % 2 != 0)
        throw input_error("odd-shore enumeration requires a graph of even order");
    if (g.order() > cap)
        throw resource_error("cuts.shore_cap=" + std::to_string(cap),
                             "order " + std::to_string(g.order()) +
                                 " exceeds the shore enumeration cap");
    std::vector<Shore> out;
    for_each_odd_shore(g.order(), [&](const Shore& s) { out.push_back(s); });
    return out;
}

/// Per-shore decision record. `tight` and `separating` come from the
/// definitional and contraction methods; `method_agreement` records that each
/// pair of independent methods agreed on this shore.
struct CutVerdict {
    Shore shore;
    bool tight = false;
    bool separating = false;
    bool trivial = false;
    bool method_agreement = true;
};

/// Evaluate the two clauses of the bipartite tight-cut characterization
/// by direct edge scans, with no perfect-matching enumeration:
///   1. || X∩A | - | X∩B || = 1
///   2. E[X∩A, X̄∩B] = ∅ if |X∩B| - |X∩A| = 1,
///      E[X∩B, X̄∩A] = ∅ if |X∩A| - |X∩B| = 1.
/// Callers are responsible for the matching-covered domain check.
inline bool tight_bipartite_unchecked(const BipartiteGraph& g, const Shore& x) {
    VertexSet xs = x.members();
    VertexSet xa = xs & g.part_a_set();
    VertexSet xb = xs & g.part_b_set();
    VertexSet ca = g.part_a_set() - xa;  // X̄ ∩ A
    VertexSet cb = g.part_b_set() - xb;  // X̄ ∩ B
    int da = xa.count(), db = xb.count();
    if (da - db != 1 && db - da != 1) return false;
    if (db - da == 1) return !neighborhood(g, xa).intersects(cb);
    return !neighborhood(g, xb).intersects(ca);
}

/// Matching-side state for cut queries against one host graph: the coverage
/// report and, when the host is matching covered, its full list of perfect
/// matchings. Build once, query many shores.
template <class G>
class CutContext {
    const G* g_;
    CoverageReport coverage_;
    std::vector<PerfectMatching> pms_;

    void require_covered() const {
        if (!coverage_.covered)
            throw domain_error(
                "tight/separating cuts are defined for matching covered graphs only");
    }

public:
    explicit CutContext(const G& g, int vertex_cap = kMatchingVertexCap)
        : g_(&g), coverage_(is_matching_covered(g)) {
        if (coverage_.covered) pms_ = enumerate_perfect_matchings(g, vertex_cap);
    }

    const G& graph() const { return *g_; }
    const CoverageReport& coverage() const { return coverage_; }
    const std::vector<PerfectMatching>& matchings() const { return pms_; }

    /// |C ∩ M| = 1 for every perfect matching M.
    bool tight_definitional(const Shore& x) const {
        require_covered();
        VertexSet xs = x.members();
        for (const PerfectMatching& m : pms_)
            if (m.crossings(xs) != 1) return false;
        return true;
    }

    /// For every edge e there is a perfect matching M_e with e in M_e and
    /// |C ∩ M_e| = 1.
    bool separating_matchingwise(const Shore& x) const {
        require_covered();
        VertexSet xs = x.members();
        // Mark every endpoint pair hit by a once-crossing matching.
        std::vector<std::pair<int, int>> hit;
        for (const PerfectMatching& m : pms_)
            if (m.crossings(xs) == 1)
                hit.insert(hit.end(), m.edges.begin(), m.edges.end());
        auto covered = [&](int u, int v) {
            for (auto [a, b] : hit)
                if (a == u && b == v) return true;
            return false;
        };
        return for_each_endpoint_pair([&](int u, int v) { return covered(u, v); });
    }

    /// Both C-contractions are matching covered.
    bool separating_contraction(const Shore& x) const {
        require_covered();
        MultiGraph cx = contract_shore(*g_, x);
        if (!is_matching_covered(cx).covered) return false;
        MultiGraph cxbar = contract_shore(*g_, Shore(x.complement(), x.host_order()));
        return is_matching_covered(cxbar).covered;
    }

    /// Full verdict; checks the two method pairs against each other and the
    /// tight => separating implication.
    CutVerdict verdict(const Shore& x) const {
        CutVerdict v{x.canonical()};
        v.trivial = x.is_trivial();
        v.tight = tight_definitional(x);
        v.separating = separating_contraction(x);
        bool sep2 = separating_matchingwise(x);
        v.method_agreement = (v.separating == sep2);
        if constexpr (std::is_same_v<G, BipartiteGraph>) {
            if (x.is_odd())
                v.method_agreement =
                    v.method_agreement && (v.tight == tight_bipartite_unchecked(*g_, x));
        }
        if (v.tight && !v.separating)
            throw property_violation("tight cut that is not separating");
        return v;
    }

private:
    template <class Pred>
    bool for_each_endpoint_pair(Pred&& ok) const {
        if constexpr (std::is_same_v<G, BipartiteGraph>) {
            for (int id = 0; id < g_->size(); ++id) {
                auto [u, v] = g_->endpoints(id);
                if (!ok(u, v)) return false;
            }
        } else {
            for (const auto& e : g_->edges())
                if (!ok(e.u, e.v)) return false;
        }
        return true;
    }
};

// Single-query forms. Sweeps should build a CutContext once instead.

template <class G>
inline bool is_tight_definitional(const G& g, const Shore& x) {
    return CutContext<G>(g).tight_definitional(x);
}

inline bool is_tight_bipartite(const BipartiteGraph& g, const Shore& x) {
    if (!x.is_odd()) throw input_error("tight-cut characterization requires |X| odd");
    if (!is_matching_covered(g).covered)
        throw domain_error(
            "tight/separating cuts are defined for matching covered graphs only");
    return tight_bipartite_unchecked(g, x);
}

template <class G>
inline bool is_separating_contraction(const G& g, const Shore& x) {
    return CutContext<G>(g).separating_contraction(x);
}

template <class G>
inline bool is_separating_matchingwise(const G& g, const Shore& x) {
    return CutContext<G>(g).separating_matchingwise(x);
}

} // namespace mcg
