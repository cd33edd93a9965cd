#pragma once

#include <optional>

#include "mcg/cuts.hpp"
#include "mcg/generate.hpp"

namespace mcg {

/// Result of the separating-but-not-tight search: the graph carrying the cut
/// is either a census graph itself or one of its shore contractions.
struct SeparatingWitness {
    BipartiteGraph host;            // census graph the witness derives from
    std::optional<Shore> contracted;  // shore of host that was contracted, if any
    MultiGraph graph;               // graph carrying the cut
    Shore cut;                      // nontrivial, separating, not tight (canonical)
};

namespace detail {

// Check every nontrivial odd shore of `h`; a hit is re-verified by the second
// separating method before being accepted.
template <class G>
inline std::optional<Shore> scan_for_separating_not_tight(const G& h) {
    if (h.order() < 6) return std::nullopt;  // no room for a nontrivial odd shore pair
    CutContext<G> ctx(h);
    if (!ctx.coverage().covered) return std::nullopt;
    std::optional<Shore> hit;
    for_each_odd_shore(h.order(), [&](const Shore& y) {
        if (hit || y.is_trivial()) return;
        if (ctx.tight_definitional(y)) return;
        if (!ctx.separating_contraction(y)) return;
        if (!ctx.separating_matchingwise(y))
            throw property_violation("separating-cut methods disagree");
        hit = y.canonical();
    });
    return hit;
}

} // namespace detail

/// Sweep the census of connected bipartite matching covered graphs in order
/// of ascending n (and canonical order within each order), looking for a
/// nontrivial separating cut that is not tight — first across each graph's
/// own odd shores, then across all of its shore-contraction multigraphs.
/// Deterministic: repeated runs return the identical witness, or none.
inline std::optional<SeparatingWitness> find_separating_not_tight(int max_n) {
    if (max_n > kEnumPartSumCap)
        throw resource_error("generate.part_sum_cap=" + std::to_string(kEnumPartSumCap),
                             "witness search is bounded by the census cap");
    GenFilter mc_only;
    mc_only.require_matching_covered = true;

    for (int n = 4; n <= max_n; n += 2) {
        for (int a = 1; 2 * a <= n; ++a) {
            const int b = n - a;
            if (b > kEnumPartSumCap - 1) continue;
            for (const BipartiteGraph& g : enumerate_bipartite(a, b, mc_only)) {
                MultiGraph gm = as_multigraph(g);
                if (auto cut = detail::scan_for_separating_not_tight(gm))
                    return SeparatingWitness{g, std::nullopt, gm, *cut};

                // Contractions: both sides of every nontrivial odd shore pair,
                // skipping sizes whose contraction is the graph itself or too
                // small to host a nontrivial odd cut.
                std::optional<SeparatingWitness> found;
                for_each_odd_shore(n, [&](const Shore& x) {
                    if (found) return;
                    for (int side = 0; side < 2 && !found; ++side) {
                        Shore s = side == 0 ? x : Shore(x.complement(), n);
                        if (s.count() < 3 || n - s.count() < 5) continue;
                        MultiGraph h = contract_shore(g, s);
                        if (auto cut = detail::scan_for_separating_not_tight(h))
                            found = SeparatingWitness{g, s, h, *cut};
                    }
                });
                if (found) return found;
            }
        }
    }
    return std::nullopt;
}

} // namespace mcg
