#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/kuratowski.hpp"

namespace mcg {

/// Cyclic neighbour order per vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityVerdict {
    bool planar = false;
    std::optional<RotationSystem> rotation;
    /// Set for connected planar inputs; faces traced from the rotation.
    std::optional<int> face_count;
    /// Best-effort witness for non-planar inputs; validated when present.
    std::optional<KuratowskiCertificate> certificate;
};

namespace detail {

// --------------------------------------------------------------------------
// Biconnected decomposition (Tarjan lowpoint, edge stack)
// --------------------------------------------------------------------------

struct Block {
    std::vector<std::pair<int, int>> edges;
};

struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<Block> blocks;
    int timer = 0;

    explicit BlockFinder(const SimpleGraph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), 0) {}

    void dfs(int v, int parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        g.adjacency(v).for_each([&](int w) {
            if (w == parent) return;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                estack.push_back({v, w});
                dfs(w, v);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
                    Block b;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        b.edges.push_back(e);
                        if (e.first == v && e.second == w) break;
                    }
                    blocks.push_back(std::move(b));
                }
            } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                estack.push_back({v, w});
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
            }
        });
    }
};

inline std::vector<Block> biconnected_blocks(const SimpleGraph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.order(); ++v)
        if (finder.disc[static_cast<std::size_t>(v)] == -1) finder.dfs(v, -1);
    return std::move(finder.blocks);
}

// --------------------------------------------------------------------------
// Face-based path addition on one 2-connected block
// --------------------------------------------------------------------------

// Embed one block; faces are maintained as simple vertex cycles, which stays
// valid because the embedded subgraph is 2-connected throughout. Returns the
// cyclic neighbour order per block vertex, or nullopt when some fragment has
// no admissible face (non-planar).
class BlockEmbedder {
    std::vector<VertexSet> adj_;  // block adjacency, global vertex ids
    VertexSet verts_;
    std::vector<std::vector<int>> faces_;
    VertexSet embedded_;
    std::vector<VertexSet> embadj_;

    struct Fragment {
        bool single_edge = false;
        int u = -1, v = -1;    // endpoints when single_edge
        VertexSet interior;    // component vertices otherwise
        VertexSet attachments;
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        VertexSet pending = verts_ - embedded_;
        VertexSet seen;
        pending.for_each([&](int s) {
            if (seen.test(s)) return;
            VertexSet comp = VertexSet::single(s);
            VertexSet frontier = comp;
            while (!frontier.empty()) {
                VertexSet next;
                frontier.for_each([&](int v) { next = next | adj_[static_cast<std::size_t>(v)]; });
                next = (next & pending) - comp;
                comp = comp | next;
                frontier = next;
            }
            seen = seen | comp;
            Fragment f;
            f.interior = comp;
            VertexSet att;
            comp.for_each([&](int v) { att = att | (adj_[static_cast<std::size_t>(v)] & embedded_); });
            f.attachments = att;
            out.push_back(f);
        });
        embedded_.for_each([&](int u) {
            VertexSet rest = (adj_[static_cast<std::size_t>(u)] & embedded_) -
                             embadj_[static_cast<std::size_t>(u)] - VertexSet::full(u + 1);
            rest.for_each([&](int v) {
                Fragment f;
                f.single_edge = true;
                f.u = u;
                f.v = v;
                f.attachments = VertexSet::single(u) | VertexSet::single(v);
                out.push_back(f);
            });
        });
        return out;
    }

    static VertexSet face_set(const std::vector<int>& face) {
        VertexSet s;
        for (int v : face) s.set(v);
        return s;
    }

    std::vector<int> fragment_path(const Fragment& f) const {
        if (f.single_edge) return {f.u, f.v};
        // BFS from the lowest attachment through the fragment interior to any
        // other attachment.
        int a1 = f.attachments.first();
        std::vector<int> parent(static_cast<std::size_t>(kMaxVertices), -1);
        VertexSet seen;
        VertexSet frontier = adj_[static_cast<std::size_t>(a1)] & f.interior;
        frontier.for_each([&](int v) { parent[static_cast<std::size_t>(v)] = a1; });
        seen = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            bool done = false;
            int hit = -1, via = -1;
            frontier.for_each([&](int v) {
                if (done) return;
                VertexSet att = adj_[static_cast<std::size_t>(v)] & f.attachments;
                att.reset(a1);
                if (!att.empty()) {
                    hit = att.first();
                    via = v;
                    done = true;
                    return;
                }
                next = next | (adj_[static_cast<std::size_t>(v)] & f.interior);
            });
            if (done) {
                std::vector<int> rev{hit};
                for (int v = via; v != a1; v = parent[static_cast<std::size_t>(v)])
                    rev.push_back(v);
                rev.push_back(a1);
                return {rev.rbegin(), rev.rend()};
            }
            next = next - seen;
            next.for_each([&](int v) {
                // record any parent in the current frontier
                VertexSet from = adj_[static_cast<std::size_t>(v)] & frontier;
                parent[static_cast<std::size_t>(v)] = from.first();
            });
            seen = seen | next;
            frontier = next;
        }
        throw property_violation("fragment with a single attachment in a 2-connected block");
    }

    void embed_path(std::size_t face_idx, const std::vector<int>& path) {
        std::vector<int> face = faces_[face_idx];
        const int a1 = path.front(), a2 = path.back();
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < face.size(); ++k) {
            if (face[k] == a1) i = k;
            if (face[k] == a2) j = k;
        }
        // Arc from a1 forward to a2 and arc from a2 forward to a1.
        std::vector<int> arc_fwd, arc_bwd;
        for (std::size_t k = i;; k = (k + 1) % face.size()) {
            arc_fwd.push_back(face[k]);
            if (k == j) break;
        }
        for (std::size_t k = j;; k = (k + 1) % face.size()) {
            arc_bwd.push_back(face[k]);
            if (k == i) break;
        }
        std::vector<int> f1 = arc_fwd;  // a1..a2 then path interior reversed
        for (std::size_t k = path.size() - 2; k >= 1; --k) f1.push_back(path[k]);
        std::vector<int> f2 = arc_bwd;  // a2..a1 then path interior forward
        for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);

        faces_[face_idx] = std::move(f1);
        faces_.push_back(std::move(f2));

        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            embadj_[static_cast<std::size_t>(path[k])].set(path[k + 1]);
            embadj_[static_cast<std::size_t>(path[k + 1])].set(path[k]);
        }
        for (int v : path) embedded_.set(v);
    }

    struct CycleFinder {
        const std::vector<VertexSet>& adj;
        std::vector<int> parent;
        VertexSet visited;
        std::vector<int> cyc;

        explicit CycleFinder(const std::vector<VertexSet>& a)
            : adj(a), parent(static_cast<std::size_t>(kMaxVertices), -1) {}

        bool dfs(int v) {
            visited.set(v);
            bool found = false;
            adj[static_cast<std::size_t>(v)].for_each([&](int w) {
                if (found || w == parent[static_cast<std::size_t>(v)]) return;
                if (visited.test(w)) {
                    // back edge: cycle w .. v
                    std::vector<int> rev;
                    for (int x = v; x != w; x = parent[static_cast<std::size_t>(x)])
                        rev.push_back(x);
                    rev.push_back(w);
                    cyc.assign(rev.rbegin(), rev.rend());
                    found = true;
                    return;
                }
                parent[static_cast<std::size_t>(w)] = v;
                if (dfs(w)) found = true;
            });
            return found;
        }
    };

    std::vector<int> initial_cycle() const {
        CycleFinder finder(adj_);
        if (!finder.dfs(verts_.first()))
            throw property_violation("no cycle in a 2-connected block");
        return finder.cyc;
    }

public:
    explicit BlockEmbedder(const Block& b) {
        adj_.assign(static_cast<std::size_t>(kMaxVertices), VertexSet());
        for (auto [u, v] : b.edges) {
            adj_[static_cast<std::size_t>(u)].set(v);
            adj_[static_cast<std::size_t>(v)].set(u);
            verts_.set(u);
            verts_.set(v);
        }
        embadj_.assign(static_cast<std::size_t>(kMaxVertices), VertexSet());
    }

    std::optional<std::map<int, std::vector<int>>> embed() {
        std::vector<int> cyc = initial_cycle();
        faces_.push_back(cyc);
        faces_.push_back({cyc.rbegin(), cyc.rend()});
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int u = cyc[k], v = cyc[(k + 1) % cyc.size()];
            embadj_[static_cast<std::size_t>(u)].set(v);
            embadj_[static_cast<std::size_t>(v)].set(u);
            embedded_.set(u);
        }

        while (true) {
            std::vector<Fragment> frags = fragments();
            if (frags.empty()) break;

            // Precompute face vertex sets once per round.
            std::vector<VertexSet> fsets;
            fsets.reserve(faces_.size());
            for (const auto& f : faces_) fsets.push_back(face_set(f));

            std::size_t best = frags.size();
            int best_count = -1;
            std::size_t best_face = 0;
            for (std::size_t fi = 0; fi < frags.size(); ++fi) {
                int count = 0;
                std::size_t first_face = 0;
                for (std::size_t k = 0; k < fsets.size(); ++k) {
                    if (frags[fi].attachments.subset_of(fsets[k])) {
                        if (count == 0) first_face = k;
                        ++count;
                    }
                }
                if (count == 0) return std::nullopt;  // non-planar
                if (best_count == -1 || count < best_count) {
                    best_count = count;
                    best = fi;
                    best_face = first_face;
                }
            }
            embed_path(best_face, fragment_path(frags[best]));
        }

        // Rotation from face corners: in a face ... u -> v -> w ..., the
        // successor of u in the rotation at v is w.
        std::map<int, std::map<int, int>> succ;
        for (const auto& f : faces_) {
            const std::size_t k = f.size();
            for (std::size_t i = 0; i < k; ++i) {
                int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
                succ[v][u] = w;
            }
        }
        std::map<int, std::vector<int>> rot;
        bool ok = true;
        verts_.for_each([&](int v) {
            const auto& sv = succ[v];
            int deg = adj_[static_cast<std::size_t>(v)].count();
            int start = adj_[static_cast<std::size_t>(v)].first();
            std::vector<int> cycle{start};
            int cur = start;
            for (int step = 1; step < deg; ++step) {
                cur = sv.at(cur);
                cycle.push_back(cur);
            }
            if (sv.at(cur) != start) ok = false;
            rot[v] = std::move(cycle);
        });
        if (!ok) throw property_violation("face corners do not close a rotation cycle");
        return rot;
    }
};

/// Count face orbits of a rotation system: the walk leaving (u -> v)
/// continues with (v -> successor of u in the rotation at v).
inline int trace_faces(const RotationSystem& rot) {
    std::map<std::pair<int, int>, bool> used;
    for (int u = 0; u < static_cast<int>(rot.size()); ++u)
        for (int v : rot[static_cast<std::size_t>(u)]) used[{u, v}] = false;
    if (used.empty()) return 1;  // edgeless: just the unbounded face
    int faces = 0;
    for (auto& [d, flag] : used) {
        if (flag) continue;
        ++faces;
        std::pair<int, int> cur = d;
        while (!used[cur]) {
            used[cur] = true;
            auto [u, v] = cur;
            const auto& rv = rot[static_cast<std::size_t>(v)];
            std::size_t i = 0;
            while (rv[i] != u) ++i;
            cur = {v, rv[(i + 1) % rv.size()]};
        }
    }
    return faces;
}

} // namespace detail

/// Exact planarity decision via block-by-block face addition. Produces a
/// rotation system for planar inputs; the decision never consults the
/// Kuratowski search (that one only furnishes the optional certificate).
inline PlanarityVerdict is_planar(const SimpleGraph& g) {
    PlanarityVerdict verdict;
    const int n = g.order();
    RotationSystem rot(static_cast<std::size_t>(n));

    bool planar = true;
    for (const detail::Block& b : detail::biconnected_blocks(g)) {
        if (b.edges.size() == 1) {
            auto [u, v] = b.edges.front();
            rot[static_cast<std::size_t>(u)].push_back(v);
            rot[static_cast<std::size_t>(v)].push_back(u);
            continue;
        }
        detail::BlockEmbedder embedder(b);
        auto block_rot = embedder.embed();
        if (!block_rot) {
            planar = false;
            break;
        }
        for (auto& [v, cycle] : *block_rot) {
            auto& rv = rot[static_cast<std::size_t>(v)];
            rv.insert(rv.end(), cycle.begin(), cycle.end());
        }
    }

    verdict.planar = planar;
    if (planar) {
        verdict.rotation = std::move(rot);
        if (is_connected(g)) verdict.face_count = detail::trace_faces(*verdict.rotation);
    } else if (n <= 20) {
        if (auto cert = find_kuratowski(g, 5'000'000)) verdict.certificate = cert;
    }
    return verdict;
}

inline PlanarityVerdict is_planar(const BipartiteGraph& g) { return is_planar(as_simple(g)); }

/// m <= 2n - 4 for simple connected planar bipartite graphs; false means the
/// exact test must come back non-planar.
inline bool bipartite_edge_bound(const BipartiteGraph& g) {
    if (g.order() < 3) throw input_error("edge bound requires n >= 3");
    if (!is_connected(g)) throw input_error("edge bound requires a connected graph");
    return g.size() <= 2 * g.order() - 4;
}

/// Recompute the face count by tracing the verdict's rotation system and
/// check n - m + f = 2. The input graph must be connected.
template <class G>
inline bool euler_check(const PlanarityVerdict& verdict, const G& g) {
    if (!verdict.planar || !verdict.rotation)
        throw input_error("euler_check requires a planar verdict with an embedding");
    if (!is_connected(g)) throw input_error("euler_check requires a connected graph");
    const RotationSystem& rot = *verdict.rotation;
    if (static_cast<int>(rot.size()) != g.order())
        throw input_error("rotation system order mismatch");
    int m = 0;
    for (const auto& r : rot) m += static_cast<int>(r.size());
    m /= 2;
    if (m != g.size()) throw input_error("rotation system does not match the graph");
    int f = detail::trace_faces(rot);
    return g.order() - m + f == 2;
}

} // namespace mcg
