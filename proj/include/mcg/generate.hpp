#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mcg/brace.hpp"
#include "mcg/graph.hpp"
#include "mcg/matching.hpp"
#include "mcg/planarity.hpp"

namespace mcg {

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

/// Canonical encoding of a bipartite graph: the lexicographically smallest
/// row-major biadjacency bitstring over all part-A and part-B permutations,
/// and over the part swap when |A| = |B|. Two graphs have equal forms iff
/// they are isomorphic as bipartite graphs with permutable colour classes.
struct CanonicalForm {
    int a = 0;
    int b = 0;
    std::vector<std::uint8_t> bytes;  // row-major bits, MSB first

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        for (std::uint8_t byte : bytes) {
            s.push_back(digits[byte >> 4]);
            s.push_back(digits[byte & 0xf]);
        }
        return std::to_string(a) + "x" + std::to_string(b) + ":" + s;
    }
};

namespace detail {

// Matrix rows as b-bit integers, column 0 at the most significant bit.
inline std::vector<std::uint64_t> biadjacency_rows(const BipartiteGraph& g) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.part_a_size()), 0);
    for (const Edge& e : g.edges())
        rows[static_cast<std::size_t>(e.a)] |= 1ULL << (g.part_b_size() - 1 - e.b);
    return rows;
}

inline std::vector<std::uint8_t> pack_bits(const std::vector<std::uint64_t>& rows, int b) {
    std::vector<std::uint8_t> bytes((rows.size() * static_cast<std::size_t>(b) + 7) / 8, 0);
    std::size_t pos = 0;
    for (std::uint64_t r : rows)
        for (int j = b - 1; j >= 0; --j, ++pos)
            if ((r >> j) & 1) bytes[pos / 8] |= static_cast<std::uint8_t>(0x80u >> (pos % 8));
    return bytes;
}

// Minimum row-major encoding of an a x b 0/1 matrix over independent row and
// column permutations. Permutations of the smaller side are enumerated; the
// larger side is then closed greedily, which is exact:
//  - with rows fixed, sorting columns ascending (as top-down bit vectors)
//    minimizes the row-major reading;
//  - with columns fixed, sorting rows ascending (as left-to-right integers)
//    does the same.
inline std::vector<std::uint8_t> min_encoding(std::vector<std::uint64_t> rows, int a, int b) {
    std::vector<std::uint8_t> best;
    auto consider = [&](const std::vector<std::uint64_t>& ordered_rows) {
        std::vector<std::uint8_t> bytes = pack_bits(ordered_rows, b);
        if (best.empty() || bytes < best) best = std::move(bytes);
    };

    if (a <= b) {
        std::vector<int> perm(static_cast<std::size_t>(a));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::uint64_t> cols(static_cast<std::size_t>(b));
        std::vector<std::uint64_t> out(static_cast<std::size_t>(a));
        do {
            for (int j = 0; j < b; ++j) {
                std::uint64_t c = 0;
                for (int i = 0; i < a; ++i)
                    c |= ((rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >>
                           (b - 1 - j)) &
                          1ULL)
                         << (a - 1 - i);
                cols[static_cast<std::size_t>(j)] = c;
            }
            std::sort(cols.begin(), cols.end());
            for (int i = 0; i < a; ++i) {
                std::uint64_t r = 0;
                for (int j = 0; j < b; ++j)
                    r |= ((cols[static_cast<std::size_t>(j)] >> (a - 1 - i)) & 1ULL)
                         << (b - 1 - j);
                out[static_cast<std::size_t>(i)] = r;
            }
            consider(out);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<int> perm(static_cast<std::size_t>(b));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::uint64_t> out(static_cast<std::size_t>(a));
        do {
            for (int i = 0; i < a; ++i) {
                std::uint64_t r = 0;
                for (int j = 0; j < b; ++j)
                    r |= ((rows[static_cast<std::size_t>(i)] >>
                           (b - 1 - perm[static_cast<std::size_t>(j)])) &
                          1ULL)
                         << (b - 1 - j);
                out[static_cast<std::size_t>(i)] = r;
            }
            std::sort(out.begin(), out.end());
            consider(out);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

} // namespace detail

/// Canonical form of g. The permutation search is factorial in min(|A|, |B|);
/// parts beyond the cap are rejected rather than silently approximated.
inline CanonicalForm canonical_form(const BipartiteGraph& g, int perm_cap = 9) {
    const int a = g.part_a_size(), b = g.part_b_size();
    if (std::min(a, b) > perm_cap)
        throw resource_error("canonical.perm_cap=" + std::to_string(perm_cap),
                             "canonicalization enumerates min(|A|,|B|)! permutations");
    CanonicalForm form;
    form.a = a;
    form.b = b;
    if (a == 0 || b == 0) return form;

    std::vector<std::uint64_t> rows = detail::biadjacency_rows(g);
    form.bytes = detail::min_encoding(rows, a, b);

    if (a == b) {
        // Part swap: canonicalize the transpose as well and keep the smaller.
        std::vector<std::uint64_t> tr(static_cast<std::size_t>(b), 0);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if ((rows[static_cast<std::size_t>(i)] >> (b - 1 - j)) & 1ULL)
                    tr[static_cast<std::size_t>(j)] |= 1ULL << (a - 1 - i);
        std::vector<std::uint8_t> swapped = detail::min_encoding(tr, b, a);
        if (swapped < form.bytes) form.bytes = std::move(swapped);
    }
    return form;
}

/// Rebuild the (canonically labeled) graph a form describes.
inline BipartiteGraph from_canonical(const CanonicalForm& form) {
    std::vector<Edge> edges;
    std::size_t pos = 0;
    for (int i = 0; i < form.a; ++i)
        for (int j = 0; j < form.b; ++j, ++pos)
            if (form.bytes[pos / 8] & (0x80u >> (pos % 8))) edges.push_back({i, j});
    return BipartiteGraph(form.a, form.b, std::move(edges));
}

// ---------------------------------------------------------------------------
// Named graphs
// ---------------------------------------------------------------------------

/// Built-in constructions: c4, path4, q3 (the 3-cube), k{a},{b} (e.g. k3,3),
/// heawood (point-line incidence graph of the Fano plane).
inline BipartiteGraph named_graph(const std::string& name) {
    if (name == "c4")
        return BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {}, "c4");
    if (name == "path4")
        return BipartiteGraph(2, 2, {{0, 0}, {1, 0}, {1, 1}}, {}, "path4");
    if (name == "q3") {
        // Vertices are the 3-bit strings, split by parity; u ~ v iff the
        // strings differ in exactly one bit.
        const int even[4] = {0, 3, 5, 6};
        const int odd[4] = {1, 2, 4, 7};
        std::vector<Edge> edges;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (__builtin_popcount(static_cast<unsigned>(even[i] ^ odd[j])) == 1)
                    edges.push_back({i, j});
        std::vector<std::string> labels;
        for (int v : even)
            labels.push_back({char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                              char('0' + (v & 1))});
        for (int v : odd)
            labels.push_back({char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                              char('0' + (v & 1))});
        return BipartiteGraph(4, 4, std::move(edges), std::move(labels), "q3");
    }
    if (name == "heawood") {
        // Points p0..p6 against the Fano lines {j, j+1, j+3} (mod 7).
        std::vector<Edge> edges;
        std::vector<std::string> labels;
        for (int j = 0; j < 7; ++j) {
            edges.push_back({j, j});
            edges.push_back({(j + 1) % 7, j});
            edges.push_back({(j + 3) % 7, j});
        }
        for (int i = 0; i < 7; ++i) labels.push_back("p" + std::to_string(i));
        for (int j = 0; j < 7; ++j) labels.push_back("l" + std::to_string(j));
        return BipartiteGraph(7, 7, std::move(edges), std::move(labels), "heawood");
    }
    if (name.size() >= 4 && name[0] == 'k') {
        std::size_t comma = name.find(',');
        if (comma != std::string::npos && comma > 1) {
            int a = 0, b = 0;
            bool ok = true;
            for (std::size_t i = 1; i < comma; ++i)
                ok = ok && name[i] >= '0' && name[i] <= '9', a = a * 10 + (name[i] - '0');
            for (std::size_t i = comma + 1; i < name.size(); ++i)
                ok = ok && name[i] >= '0' && name[i] <= '9', b = b * 10 + (name[i] - '0');
            if (ok && a >= 1 && b >= 1 && a + b <= kMaxVertices) {
                std::vector<Edge> edges;
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j) edges.push_back({i, j});
                return BipartiteGraph(a, b, std::move(edges), {}, name);
            }
        }
    }
    throw input_error("unknown graph name: " + name);
}

// ---------------------------------------------------------------------------
// Exhaustive canonical enumeration
// ---------------------------------------------------------------------------

/// Conjunctive filters for the census enumerator.
struct GenFilter {
    int min_degree = 0;
    bool require_matching_covered = false;
    bool require_brace = false;
    bool require_planar = false;
    enum class MaxEdgesRule { none, bipartite_planar } max_edges_rule = MaxEdgesRule::none;
};

inline constexpr int kEnumPartSumCap = 14;

namespace detail {

// Column-by-column orderly generation. Columns are top-down bit vectors
// (row 0 = most significant) added in non-decreasing order; partial matrices
// whose row prefixes are already out of order cannot extend to a canonical
// matrix and are pruned. Survivors are accepted iff equal to their own
// canonical form, so each isomorphism class is emitted exactly once.
class BipartiteEnumerator {
    int a_, b_;
    const GenFilter& filter_;
    int min_col_weight_;
    int max_edges_;
    std::vector<std::uint64_t> cols_;
    std::vector<BipartiteGraph>& out_;
    std::vector<CanonicalForm>& forms_;

    bool row_prefixes_ordered(int placed) const {
        // Compare adjacent row prefixes, most significant column first. If a
        // prefix pair is already strictly out of order the matrix can never
        // equal its canonical form (whose rows are sorted), whatever follows.
        for (int i = 0; i + 1 < a_; ++i) {
            for (int k = 0; k < placed; ++k) {
                const std::uint64_t c = cols_[static_cast<std::size_t>(k)];
                int x = static_cast<int>((c >> (a_ - 1 - i)) & 1ULL);
                int y = static_cast<int>((c >> (a_ - 2 - i)) & 1ULL);
                if (x != y) {
                    if (x > y) return false;
                    break;
                }
            }
        }
        return true;
    }

    void finish() {
        std::vector<Edge> edges;
        for (int j = 0; j < b_; ++j)
            for (int i = 0; i < a_; ++i)
                if ((cols_[static_cast<std::size_t>(j)] >> (a_ - 1 - i)) & 1ULL)
                    edges.push_back({i, j});
        BipartiteGraph g(a_, b_, std::move(edges));

        DegreeProfile prof = degree_profile(g);
        for (int i = 0; i < a_; ++i)
            if (prof.degree[static_cast<std::size_t>(i)] < filter_.min_degree) return;
        if (!is_connected(g)) return;

        CanonicalForm form = canonical_form(g);
        {
            // Accept only the class representative: the matrix that equals
            // its own canonical encoding.
            std::vector<std::uint64_t> rows = biadjacency_rows(g);
            if (pack_bits(rows, b_) != form.bytes) return;
        }

        if (filter_.require_matching_covered && !is_matching_covered(g).covered) return;
        if (filter_.require_brace) {
            if (g.order() >= 6) {
                if (!is_brace(g, BraceMethod::neighborhood).is_brace) return;
            } else {
                if (!is_brace(g, BraceMethod::tight_cut_free).is_brace) return;
            }
        }
        if (filter_.require_planar && !is_planar(g).planar) return;

        forms_.push_back(std::move(form));
        out_.push_back(std::move(g));
    }

    void place(int j, std::uint64_t prev, int edges_so_far) {
        if (j == b_) {
            finish();
            return;
        }
        // Every remaining column adds at least min_col_weight_ edges.
        for (std::uint64_t c = prev; c < (1ULL << a_); ++c) {
            int w = __builtin_popcountll(c);
            if (w < min_col_weight_) continue;
            if (edges_so_far + w + (b_ - j - 1) * min_col_weight_ > max_edges_) continue;
            cols_[static_cast<std::size_t>(j)] = c;
            if (!row_prefixes_ordered(j + 1)) continue;
            // Rows must still be able to reach the degree floor.
            if (filter_.min_degree > 0) {
                bool feasible = true;
                for (int i = 0; i < a_ && feasible; ++i) {
                    int d = 0;
                    for (int k = 0; k <= j; ++k)
                        d += (cols_[static_cast<std::size_t>(k)] >> (a_ - 1 - i)) & 1ULL;
                    if (d + (b_ - j - 1) < filter_.min_degree) feasible = false;
                }
                if (!feasible) continue;
            }
            place(j + 1, c, edges_so_far + w);
        }
    }

public:
    BipartiteEnumerator(int a, int b, const GenFilter& f, std::vector<BipartiteGraph>& out,
                        std::vector<CanonicalForm>& forms)
        : a_(a), b_(b), filter_(f), out_(out), forms_(forms) {
        min_col_weight_ = std::max(1, filter_.min_degree);
        max_edges_ = a_ * b_;
        if (filter_.max_edges_rule == GenFilter::MaxEdgesRule::bipartite_planar)
            max_edges_ = std::min(max_edges_, 2 * (a_ + b_) - 4);
        cols_.assign(static_cast<std::size_t>(b_), 0);
    }

    void run() { place(0, 1, 0); }
};

} // namespace detail

/// Exactly one representative per bipartite-isomorphism class of connected
/// graphs on parts of size a and b passing the filter, ordered by canonical
/// form.
inline std::vector<BipartiteGraph> enumerate_bipartite(int a, int b,
                                                       const GenFilter& filter = {}) {
    if (a < 1 || b < 1) throw input_error("part sizes must be at least 1");
    if (a + b > kEnumPartSumCap)
        throw resource_error("generate.part_sum_cap=" + std::to_string(kEnumPartSumCap),
                             "a + b exceeds the enumeration cap");
    std::vector<BipartiteGraph> graphs;
    std::vector<CanonicalForm> forms;
    detail::BipartiteEnumerator e(a, b, filter, graphs, forms);
    e.run();

    std::vector<std::size_t> idx(graphs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return forms[x] < forms[y]; });
    std::vector<BipartiteGraph> sorted;
    sorted.reserve(graphs.size());
    for (std::size_t i : idx) sorted.push_back(std::move(graphs[i]));
    return sorted;
}

} // namespace mcg
