#pragma once

#include <optional>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// A K5- or K3,3-subdivision found in a host graph: branch vertices plus one
/// internally disjoint path per required branch pair.
struct KuratowskiCertificate {
    enum class Kind { K5, K33 };
    Kind kind = Kind::K33;
    /// K5: 5 vertices. K33: 6 vertices, first 3 = one side.
    std::vector<int> branch;
    /// One path per branch pair (K5: 10, K33: 9), as vertex sequences whose
    /// endpoints are branch vertices.
    std::vector<std::vector<int>> paths;
};

namespace detail {

// Exhaustive packing of internally disjoint paths between required branch
// pairs. `budget` caps the number of search nodes; exceeding it aborts with
// false-without-proof, which callers treat as "no certificate found".
class SubdivisionSearch {
    const SimpleGraph& g_;
    std::vector<std::pair<int, int>> pairs_;
    VertexSet branch_;
    std::vector<std::vector<int>> paths_;
    long long budget_;
    bool exhausted_ = false;

    bool place(std::size_t idx, VertexSet used_interior) {
        if (idx == pairs_.size()) return true;
        auto [s, t] = pairs_[idx];
        std::vector<int> path{s};
        return extend(idx, s, t, used_interior, path);
    }

    bool extend(std::size_t idx, int at, int t, VertexSet used, std::vector<int>& path) {
        if (--budget_ < 0) {
            exhausted_ = true;
            return false;
        }
        VertexSet nbrs = g_.adjacency(at);
        if (nbrs.test(t)) {
            path.push_back(t);
            paths_.push_back(path);
            if (place(idx + 1, used)) return true;
            paths_.pop_back();
            path.pop_back();
            if (exhausted_) return false;
        }
        VertexSet options = nbrs - used - branch_;
        bool found = false;
        options.for_each([&](int w) {
            if (found || exhausted_) return;
            path.push_back(w);
            if (extend(idx, w, t, used | VertexSet::single(w), path)) {
                found = true;
                return;
            }
            path.pop_back();
        });
        return found;
    }

public:
    SubdivisionSearch(const SimpleGraph& g, std::vector<std::pair<int, int>> pairs,
                      VertexSet branch, long long budget)
        : g_(g), pairs_(std::move(pairs)), branch_(branch), budget_(budget) {}

    std::optional<std::vector<std::vector<int>>> run() {
        if (place(0, VertexSet())) return paths_;
        return std::nullopt;
    }
    bool hit_budget() const { return exhausted_; }
};

// Visit all k-subsets of `pool` in lexicographic order; stop early when the
// visitor returns true.
template <class F>
inline bool for_each_combination(const std::vector<int>& pool, int k, F&& f) {
    const int n = static_cast<int>(pool.size());
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> chosen(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            chosen[static_cast<std::size_t>(i)] =
                pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (f(chosen)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

/// Brute-force search for a K5 or K3,3 subdivision. Exact for every input it
/// completes on; returns nullopt either when no subdivision exists or when
/// the node budget ran out (`exhausted`, if given, tells the two apart).
inline std::optional<KuratowskiCertificate>
find_kuratowski(const SimpleGraph& g, long long budget = 50'000'000,
                bool* exhausted = nullptr) {
    if (exhausted) *exhausted = false;

    std::vector<int> deg3, deg4;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.adjacency(v).count();
        if (d >= 3) deg3.push_back(v);
        if (d >= 4) deg4.push_back(v);
    }

    std::optional<KuratowskiCertificate> found;
    bool out_of_budget = false;

    // K3,3 first: in the bipartite census it is the only pattern that can
    // occur, and it is the cheaper search.
    detail::for_each_combination(deg3, 6, [&](const std::vector<int>& six) {
        // All 10 splits into two unordered triples; fix six[0] on the left.
        for (int mask = 0; mask < (1 << 5); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != 2) continue;
            std::vector<int> left{six[0]}, right;
            for (int i = 0; i < 5; ++i)
                ((mask >> i) & 1 ? left : right).push_back(six[static_cast<std::size_t>(i + 1)]);
            VertexSet branch;
            for (int v : six) branch.set(v);
            std::vector<std::pair<int, int>> pairs;
            for (int l : left)
                for (int r : right) pairs.push_back({l, r});
            detail::SubdivisionSearch search(g, pairs, branch, budget);
            if (auto paths = search.run()) {
                KuratowskiCertificate cert;
                cert.kind = KuratowskiCertificate::Kind::K33;
                cert.branch = left;
                cert.branch.insert(cert.branch.end(), right.begin(), right.end());
                cert.paths = *paths;
                found = cert;
                return true;
            }
            if (search.hit_budget()) {
                out_of_budget = true;
                return true;
            }
        }
        return false;
    });
    if (found) return found;
    if (out_of_budget) {
        if (exhausted) *exhausted = true;
        return std::nullopt;
    }

    detail::for_each_combination(deg4, 5, [&](const std::vector<int>& five) {
        VertexSet branch;
        for (int v : five) branch.set(v);
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) pairs.push_back({five[i], five[j]});
        detail::SubdivisionSearch search(g, pairs, branch, budget);
        if (auto paths = search.run()) {
            KuratowskiCertificate cert;
            cert.kind = KuratowskiCertificate::Kind::K5;
            cert.branch = five;
            cert.paths = *paths;
            found = cert;
            return true;
        }
        if (search.hit_budget()) {
            out_of_budget = true;
            return true;
        }
        return false;
    });
    if (out_of_budget && exhausted) *exhausted = true;
    return found;
}

/// Structural validation of a claimed subdivision against its host graph.
inline bool validate_kuratowski(const SimpleGraph& g, const KuratowskiCertificate& cert) {
    const bool k5 = cert.kind == KuratowskiCertificate::Kind::K5;
    const std::size_t nb = k5 ? 5u : 6u;
    if (cert.branch.size() != nb) return false;
    VertexSet branch;
    for (int v : cert.branch) {
        if (v < 0 || v >= g.order() || branch.test(v)) return false;
        branch.set(v);
    }

    std::vector<std::pair<int, int>> want;
    if (k5) {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                want.push_back({cert.branch[i], cert.branch[j]});
    } else {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 3; j < 6; ++j)
                want.push_back({cert.branch[i], cert.branch[j]});
    }
    if (cert.paths.size() != want.size()) return false;

    VertexSet interiors;
    for (std::size_t p = 0; p < want.size(); ++p) {
        const std::vector<int>& path = cert.paths[p];
        if (path.size() < 2) return false;
        if (path.front() != want[p].first || path.back() != want[p].second) return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            if (branch.test(v) || interiors.test(v)) return false;
            interiors.set(v);
        }
    }
    return true;
}

} // namespace mcg
