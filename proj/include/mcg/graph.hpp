#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg {

// All graphs in this library live on at most 64 vertices so that vertex
// subsets fit into one machine word. Vertices are dense integer indices
// internally; human-readable labels are carried alongside and used in all
// reports.

inline constexpr int kMaxVertices = 64;

/// Subset of the vertices {0, ..., n-1} of a host graph, n <= 64.
class VertexSet {
    std::uint64_t bits_ = 0;

public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return __builtin_popcountll(bits_); }
    constexpr bool test(int v) const { return (bits_ >> v) & 1ULL; }
    constexpr void set(int v) { bits_ |= 1ULL << v; }
    constexpr void reset(int v) { bits_ &= ~(1ULL << v); }
    /// Lowest vertex in the set; set must be nonempty.
    constexpr int first() const { return __builtin_ctzll(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet complement_in(int n) const {
        return VertexSet(~bits_ & full(n).bits());
    }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    /// Visit members in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(__builtin_ctzll(b));
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }
};

/// Edge of a bipartite graph, by position within each part:
/// a in [0, |A|), b in [0, |B|).
struct Edge {
    int a = 0;
    int b = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple bipartite graph with explicit two-part vertex labeling.
///
/// Part A occupies global vertex indices 0..a-1, part B indices a..a+b-1.
/// The edge list is kept sorted by (a, b) so iteration order is
/// deterministic everywhere.
class BipartiteGraph {
    int a_ = 0;
    int b_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;       // by global vertex index
    std::vector<std::string> labels_;  // by global vertex index
    std::string name_;

public:
    BipartiteGraph() = default;

    BipartiteGraph(int a, int b, std::vector<Edge> edges,
                   std::vector<std::string> labels = {}, std::string name = {})
        : a_(a), b_(b), edges_(std::move(edges)), labels_(std::move(labels)),
          name_(std::move(name)) {
        if (a_ < 0 || b_ < 0 || a_ + b_ > kMaxVertices)
            throw input_error("part sizes out of range (0 <= a+b <= 64)");
        std::sort(edges_.begin(), edges_.end());
        adj_.assign(static_cast<std::size_t>(a_ + b_), VertexSet());
        const Edge* prev = nullptr;
        for (const Edge& e : edges_) {
            if (e.a < 0 || e.a >= a_ || e.b < 0 || e.b >= b_)
                throw input_error("edge endpoint out of range");
            if (prev && *prev == e) throw input_error("parallel edge in bipartite graph");
            prev = &e;
            adj_[static_cast<std::size_t>(e.a)].set(a_ + e.b);
            adj_[static_cast<std::size_t>(a_ + e.b)].set(e.a);
        }
        if (labels_.empty()) {
            labels_.reserve(static_cast<std::size_t>(a_ + b_));
            for (int i = 0; i < a_; ++i) labels_.push_back("a" + std::to_string(i));
            for (int j = 0; j < b_; ++j) labels_.push_back("b" + std::to_string(j));
        } else if (static_cast<int>(labels_.size()) != a_ + b_) {
            throw input_error("label count does not match vertex count");
        } else {
            for (std::size_t i = 0; i < labels_.size(); ++i)
                for (std::size_t j = i + 1; j < labels_.size(); ++j)
                    if (labels_[i] == labels_[j])
                        throw input_error("duplicate vertex label: " + labels_[i]);
        }
    }

    int part_a_size() const { return a_; }
    int part_b_size() const { return b_; }
    int order() const { return a_ + b_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    bool in_part_a(int v) const { return v < a_; }
    int global_a(int a_local) const { return a_local; }
    int global_b(int b_local) const { return a_ + b_local; }
    /// Global endpoint indices of an edge.
    std::pair<int, int> endpoints(int id) const {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        return {e.a, a_ + e.b};
    }

    VertexSet adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet part_a_set() const { return VertexSet::full(a_); }
    VertexSet part_b_set() const {
        return VertexSet::full(a_ + b_) - VertexSet::full(a_);
    }
    VertexSet vertex_set() const { return VertexSet::full(a_ + b_); }

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    /// Id of the edge {u, v} given by global endpoints, or -1.
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        if (u >= a_ || v < a_) return -1;
        Edge key{u, v - a_};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || !(*it == key)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Global index of the vertex with the given label.
    int vertex_by_label(const std::string& lab) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == lab) return static_cast<int>(i);
        throw input_error("unknown vertex id: " + lab);
    }

    /// Same graph without one edge.
    BipartiteGraph without_edge(int id) const {
        std::vector<Edge> es = edges_;
        es.erase(es.begin() + id);
        return BipartiteGraph(a_, b_, std::move(es), labels_, name_);
    }

    friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.edges_ == y.edges_ &&
               x.labels_ == y.labels_;
    }
};

/// General multigraph; produced by shore contraction. Loops created by a
/// contraction are deleted, parallel edges are kept with multiplicities.
class MultiGraph {
public:
    struct MultiEdge {
        int u = 0;  // u < v
        int v = 0;
        int mult = 1;
        friend constexpr auto operator<=>(const MultiEdge&, const MultiEdge&) = default;
    };

private:
    int n_ = 0;
    std::vector<MultiEdge> edges_;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;

public:
    MultiGraph() = default;

    MultiGraph(int n, std::vector<MultiEdge> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        if (n_ < 0 || n_ > kMaxVertices) throw input_error("order out of range");
        std::sort(edges_.begin(), edges_.end());
        adj_.assign(static_cast<std::size_t>(n_), VertexSet());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            MultiEdge& e = edges_[i];
            if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u >= e.v)
                throw input_error("bad multigraph edge");
            if (e.mult < 1) throw input_error("edge multiplicity must be >= 1");
            if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
                throw input_error("duplicate endpoint pair; merge multiplicities");
            adj_[static_cast<std::size_t>(e.u)].set(e.v);
            adj_[static_cast<std::size_t>(e.v)].set(e.u);
        }
        if (labels_.empty()) {
            for (int i = 0; i < n_; ++i) labels_.push_back("v" + std::to_string(i));
        } else if (static_cast<int>(labels_.size()) != n_) {
            throw input_error("label count does not match vertex count");
        }
    }

    int order() const { return n_; }
    /// Number of distinct endpoint pairs.
    int simple_size() const { return static_cast<int>(edges_.size()); }
    /// Number of edges counted with multiplicity.
    int size() const {
        int m = 0;
        for (const auto& e : edges_) m += e.mult;
        return m;
    }
    const std::vector<MultiEdge>& edges() const { return edges_; }
    VertexSet adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet vertex_set() const { return VertexSet::full(n_); }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const MultiGraph& x, const MultiGraph& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }
};

inline MultiGraph as_multigraph(const BipartiteGraph& g) {
    std::vector<MultiGraph::MultiEdge> es;
    es.reserve(g.edges().size());
    for (int id = 0; id < g.size(); ++id) {
        auto [u, v] = g.endpoints(id);
        es.push_back({u, v, 1});
    }
    return MultiGraph(g.order(), std::move(es), g.labels());
}

/// Plain simple graph, the input type of the planarity machinery (which must
/// also handle non-bipartite graphs such as K5).
class SimpleGraph {
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;

public:
    SimpleGraph() = default;

    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges,
                std::vector<std::string> labels = {})
        : n_(n), labels_(std::move(labels)) {
        if (n_ < 0 || n_ > kMaxVertices) throw input_error("order out of range");
        adj_.assign(static_cast<std::size_t>(n_), VertexSet());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
                throw input_error("bad edge");
            adj_[static_cast<std::size_t>(u)].set(v);
            adj_[static_cast<std::size_t>(v)].set(u);
        }
        if (labels_.empty())
            for (int i = 0; i < n_; ++i) labels_.push_back("v" + std::to_string(i));
        else if (static_cast<int>(labels_.size()) != n_)
            throw input_error("label count does not match vertex count");
    }

    int order() const { return n_; }
    int size() const {
        int s = 0;
        for (const auto& a : adj_) s += a.count();
        return s / 2;
    }
    VertexSet adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet vertex_set() const { return VertexSet::full(n_); }
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    std::vector<std::pair<int, int>> edge_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            (adj_[static_cast<std::size_t>(u)] - VertexSet::full(u + 1))
                .for_each([&](int v) { out.push_back({u, v}); });
        return out;
    }
};

inline SimpleGraph as_simple(const BipartiteGraph& g) {
    std::vector<std::pair<int, int>> es;
    for (int id = 0; id < g.size(); ++id) es.push_back(g.endpoints(id));
    return SimpleGraph(g.order(), es, g.labels());
}

/// Underlying simple graph; multiplicities are irrelevant to planarity.
inline SimpleGraph as_simple(const MultiGraph& g) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    return SimpleGraph(g.order(), es, g.labels());
}

/// A shore: one side X of the cut {X, X-bar} of a host graph of given order.
class Shore {
    VertexSet members_;
    int host_order_ = 0;

public:
    Shore(VertexSet members, int host_order)
        : members_(members), host_order_(host_order) {
        if (host_order_ < 2 || host_order_ > kMaxVertices)
            throw input_error("shore host order out of range");
        if (!members_.subset_of(VertexSet::full(host_order_)))
            throw input_error("shore contains unknown vertex");
        int k = members_.count();
        if (k < 1 || k > host_order_ - 1)
            throw input_error("shore must satisfy 1 <= |X| <= n-1");
    }

    VertexSet members() const { return members_; }
    int host_order() const { return host_order_; }
    int count() const { return members_.count(); }
    VertexSet complement() const { return members_.complement_in(host_order_); }
    bool is_trivial() const {
        return count() == 1 || count() == host_order_ - 1;
    }
    bool is_odd() const { return count() % 2 == 1; }

    /// The {X, X-bar} representative containing the lowest-indexed vertex.
    Shore canonical() const {
        if (members_.test(0)) return *this;
        return Shore(complement(), host_order_);
    }

    friend bool operator==(const Shore& x, const Shore& y) {
        return x.members_ == y.members_ && x.host_order_ == y.host_order_;
    }
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// N(X) = { y in V(G)\X : exists x in X with xy in E(G) }.
inline VertexSet neighborhood(const BipartiteGraph& g, VertexSet xs) {
    if (!xs.subset_of(g.vertex_set())) throw input_error("unknown vertex id in subset");
    VertexSet acc;
    xs.for_each([&](int v) { acc = acc | g.adjacency(v); });
    return acc - xs;
}

/// The cut of X: ids of all edges with exactly one end in X.
inline std::vector<int> edge_cut(const BipartiteGraph& g, const Shore& x) {
    if (x.host_order() != g.order()) throw input_error("shore/host order mismatch");
    VertexSet xs = x.members();
    std::vector<int> out;
    for (int id = 0; id < g.size(); ++id) {
        auto [u, v] = g.endpoints(id);
        if (xs.test(u) != xs.test(v)) out.push_back(id);
    }
    return out;
}

/// Crossing count |D ∩ ∂(X)| for a set of endpoint pairs, usable for both
/// graph kinds; counts each endpoint pair once.
inline int cut_degree(VertexSet xs, const std::vector<std::pair<int, int>>& pairs) {
    int c = 0;
    for (auto [u, v] : pairs)
        if (xs.test(u) != xs.test(v)) ++c;
    return c;
}

namespace detail {

inline MultiGraph contract_impl(int n, const std::vector<MultiGraph::MultiEdge>& edges,
                                const std::vector<std::string>& labels, VertexSet xs) {
    // Vertices of X-bar keep their relative order and occupy indices
    // 0..|X-bar|-1; the contraction vertex comes last.
    VertexSet keep = xs.complement_in(n);
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    keep.for_each([&](int v) { remap[static_cast<std::size_t>(v)] = next++; });
    const int cvert = next;

    std::vector<MultiGraph::MultiEdge> out;
    for (const auto& e : edges) {
        bool iu = xs.test(e.u), iv = xs.test(e.v);
        if (iu && iv) continue;  // would become a loop: delete
        int u = iu ? cvert : remap[static_cast<std::size_t>(e.u)];
        int v = iv ? cvert : remap[static_cast<std::size_t>(e.v)];
        if (u > v) std::swap(u, v);
        out.push_back({u, v, e.mult});
    }
    std::sort(out.begin(), out.end());
    std::vector<MultiGraph::MultiEdge> merged;
    for (const auto& e : out) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    std::vector<std::string> lab;
    lab.reserve(static_cast<std::size_t>(cvert + 1));
    keep.for_each([&](int v) { lab.push_back(labels[static_cast<std::size_t>(v)]); });
    lab.push_back("x*");
    return MultiGraph(cvert + 1, std::move(merged), std::move(lab));
}

} // namespace detail

/// G/(X -> x): shrink the shore X to a single contraction vertex, deleting
/// any loops; edge multiplicities are preserved.
inline MultiGraph contract_shore(const BipartiteGraph& g, const Shore& x) {
    if (x.host_order() != g.order()) throw input_error("shore/host order mismatch");
    return detail::contract_impl(g.order(), as_multigraph(g).edges(), g.labels(),
                                 x.members());
}

inline MultiGraph contract_shore(const MultiGraph& g, const Shore& x) {
    if (x.host_order() != g.order()) throw input_error("shore/host order mismatch");
    return detail::contract_impl(g.order(), g.edges(), g.labels(), x.members());
}

struct DegreeProfile {
    std::vector<int> degree;  // by global vertex index
    int n3 = 0;               // number of cubic vertices
    int degree_sum = 0;
};

inline DegreeProfile degree_profile(const BipartiteGraph& g) {
    DegreeProfile p;
    p.degree.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        int d = g.adjacency(v).count();
        p.degree[static_cast<std::size_t>(v)] = d;
        p.degree_sum += d;
        if (d == 3) ++p.n3;
    }
    return p;
}

inline DegreeProfile degree_profile(const MultiGraph& g) {
    DegreeProfile p;
    p.degree.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : g.edges()) {
        p.degree[static_cast<std::size_t>(e.u)] += e.mult;
        p.degree[static_cast<std::size_t>(e.v)] += e.mult;
    }
    for (int d : p.degree) {
        p.degree_sum += d;
        if (d == 3) ++p.n3;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Connectivity (shared by several modules)
// ---------------------------------------------------------------------------

namespace detail {

template <class G>
inline VertexSet reach_from(const G& g, int start, VertexSet within) {
    VertexSet seen = VertexSet::single(start) & within;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next = next | g.adjacency(v); });
        next = (next & within) - seen;
        seen = seen | next;
        frontier = next;
    }
    return seen;
}

} // namespace detail

template <class G>
inline bool is_connected(const G& g) {
    if (g.order() == 0) return false;
    return detail::reach_from(g, 0, g.vertex_set()) == g.vertex_set();
}

} // namespace mcg
