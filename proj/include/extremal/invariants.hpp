#ifndef EXTREMAL_INVARIANTS_HPP
#define EXTREMAL_INVARIANTS_HPP

#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "extremal/graph.hpp"

namespace extremal {

/// Sentinel distance/diameter value for unreachable pairs.
inline constexpr int kInfiniteDistance = -1;

namespace detail {

inline VertexMask reach_from(const Graph& g, VertexMask seed, VertexMask within) {
    VertexMask seen = seed & within;
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1)
            next |= g.neighbors(std::countr_zero(f));
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool connected_in_mask(const Graph& g, VertexMask sub) {
    if (sub == 0) return true;
    const VertexMask seed = sub & (~sub + 1);
    return reach_from(g, seed, sub) == sub;
}

inline bool is_clique_mask(const Graph& g, VertexMask m) {
    for (VertexMask x = m; x != 0; x &= x - 1) {
        const int v = std::countr_zero(x);
        if (((m & ~vertex_bit(v)) & ~g.neighbors(v)) != 0) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
    return detail::connected_in_mask(g, g.vertex_mask());
}

inline bool is_complete(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v) != (g.vertex_mask() & ~vertex_bit(v))) return false;
    return true;
}

/// Breadth-first distances from one source; unreachable entries are
/// kInfiniteDistance.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfiniteDistance);
    VertexMask seen = vertex_bit(source);
    VertexMask frontier = seen;
    int level = 0;
    while (frontier != 0) {
        for (VertexMask f = frontier; f != 0; f &= f - 1)
            dist[static_cast<std::size_t>(std::countr_zero(f))] = level;
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1)
            next |= g.neighbors(std::countr_zero(f));
        frontier = next & ~seen;
        seen |= frontier;
        ++level;
    }
    return dist;
}

inline std::vector<std::vector<int>> all_pairs_distance(const Graph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
    return dist;
}

/// Largest finite distance, or kInfiniteDistance for disconnected graphs.
/// Undefined (throws) for fewer than two vertices.
inline int diameter(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("diameter: undefined for graphs with fewer than 2 vertices");
    if (!is_connected(g)) return kInfiniteDistance;
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto dist = bfs_distances(g, v);
        for (int d : dist) best = std::max(best, d);
    }
    return best;
}

namespace detail {

// Unit-capacity max-flow counting internally vertex-disjoint s-t paths.
// Every vertex v splits into in-node 2v and out-node 2v+1 joined by a
// capacity-1 arc; each edge {u,v} contributes u_out->v_in and v_out->u_in.
struct SplitFlowNetwork {
    struct Arc {
        int to;
        int rev;
        int cap;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit SplitFlowNetwork(const Graph& g) : arcs(2 * static_cast<std::size_t>(g.vertex_count())) {
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v);
            add_arc(2 * v + 1, 2 * u);
        }
    }

    void add_arc(int from, int to) {
        arcs[static_cast<std::size_t>(from)].push_back({to, static_cast<int>(arcs[static_cast<std::size_t>(to)].size()), 1});
        arcs[static_cast<std::size_t>(to)].push_back({from, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1, 0});
    }

    // Shortest augmenting paths, stopping once `limit` units are routed.
    int max_flow(int source, int sink, int limit) {
        int flow = 0;
        std::vector<std::pair<int, int>> parent(arcs.size());  // (node, arc index)
        std::vector<int> queue(arcs.size());
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), std::make_pair(-1, -1));
            parent[static_cast<std::size_t>(source)] = {source, -1};
            int head = 0, tail = 0;
            queue[tail++] = source;
            bool reached = false;
            while (head < tail && !reached) {
                const int node = queue[head++];
                const auto& out = arcs[static_cast<std::size_t>(node)];
                for (std::size_t k = 0; k < out.size(); ++k) {
                    const Arc& a = out[k];
                    if (a.cap <= 0 || parent[static_cast<std::size_t>(a.to)].first >= 0) continue;
                    parent[static_cast<std::size_t>(a.to)] = {node, static_cast<int>(k)};
                    if (a.to == sink) {
                        reached = true;
                        break;
                    }
                    queue[tail++] = a.to;
                }
            }
            if (!reached) break;
            for (int node = sink; node != source;) {
                auto [prev, k] = parent[static_cast<std::size_t>(node)];
                Arc& a = arcs[static_cast<std::size_t>(prev)][static_cast<std::size_t>(k)];
                a.cap -= 1;
                arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
                node = prev;
            }
            ++flow;
        }
        return flow;
    }
};

inline int max_vertex_disjoint_paths(const Graph& g, int s, int t, int limit) {
    SplitFlowNetwork net(g);
    return net.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace detail

/// Vertex connectivity. Complete graphs get the n-1 convention;
/// disconnected graphs report 0. For the rest this is the minimum over
/// non-adjacent pairs of the number of internally vertex-disjoint paths
/// between them, which by Menger's theorem is the smallest separator size.
inline int kappa(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("kappa: undefined for graphs with fewer than 2 vertices");
    if (is_complete(g)) return n - 1;
    if (!is_connected(g)) return 0;
    int best = n;
    for (int v = 0; v < n; ++v) best = std::min(best, g.degree(v));
    for (int s = 0; s < n && best > 1; ++s)
        for (int t = s + 1; t < n && best > 1; ++t)
            if (!g.has_edge(s, t))
                best = std::min(best, detail::max_vertex_disjoint_paths(g, s, t, best));
    return best;
}

/// Literal definition of vertex connectivity: smallest T whose removal
/// leaves a disconnected graph on at least two vertices. Testing oracle for
/// kappa(); same n-1 convention on complete graphs.
inline int kappa_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("kappa_bruteforce: undefined for graphs with fewer than 2 vertices");
    if (is_complete(g)) return n - 1;
    const VertexMask all = g.vertex_mask();
    for (int k = 0; k <= n - 2; ++k) {
        for (VertexMask t = 0; t <= all; ++t) {
            if (std::popcount(t) != k) continue;
            const VertexMask rest = all & ~t;
            if (std::popcount(rest) >= 2 && !detail::connected_in_mask(g, rest)) return k;
            if (t == all) break;
        }
    }
    return n - 1;
}

/// Vertices whose neighborhood induces a clique (simplicial vertices).
/// Isolated and degree-1 vertices qualify vacuously.
inline VertexMask free_vertices(const Graph& g) {
    VertexMask result = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexMask nb = g.neighbors(v);
        if (detail::is_clique_mask(g, nb)) result |= vertex_bit(v);
    }
    return result;
}

struct ChordalityResult {
    bool is_chordal = false;
    /// Ordering in which every vertex's earlier neighbors form a clique;
    /// present iff chordal.
    std::optional<std::vector<int>> peo;
    /// Witness induced cycle of length >= 4; present iff not chordal.
    std::optional<std::vector<int>> induced_cycle;
};

namespace detail {

// Looks for an induced cycle of length >= 4: for a vertex v with two
// non-adjacent neighbors x, y, any x-y path avoiding the rest of N[v]
// closes one; a shortest such path has no chords.
inline std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const auto nbrs = mask_to_vertices(g.neighbors(v));
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                const int x = nbrs[a], y = nbrs[b];
                if (g.has_edge(x, y)) continue;
                const VertexMask allowed =
                    (g.vertex_mask() & ~g.neighbors(v) & ~vertex_bit(v)) | vertex_bit(x) | vertex_bit(y);
                // BFS from x to y inside `allowed`
                std::vector<int> parent(static_cast<std::size_t>(n), -1);
                parent[static_cast<std::size_t>(x)] = x;
                VertexMask frontier = vertex_bit(x);
                VertexMask seen = frontier;
                bool found = false;
                while (frontier != 0 && !found) {
                    VertexMask next = 0;
                    for (VertexMask f = frontier; f != 0 && !found; f &= f - 1) {
                        const int u = std::countr_zero(f);
                        for (VertexMask m = g.neighbors(u) & allowed & ~seen; m != 0; m &= m - 1) {
                            const int w = std::countr_zero(m);
                            parent[static_cast<std::size_t>(w)] = u;
                            next |= vertex_bit(w);
                            if (w == y) {
                                found = true;
                                break;
                            }
                        }
                    }
                    seen |= next;
                    frontier = next & ~vertex_bit(y);
                }
                if (!found) continue;
                std::vector<int> path;
                for (int u = y; u != x; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
                path.push_back(x);
                path.push_back(v);            // close the cycle through v
                std::reverse(path.begin(), path.end());  // v, x, ..., y
                return path;
            }
    }
    return std::nullopt;
}

}  // namespace detail

/// Maximum cardinality search plus verification that every vertex's
/// earlier-visited neighbors form a clique. For chordal graphs MCS always
/// produces such an ordering; any failure therefore comes with an induced
/// cycle of length >= 4, which is located as a witness.
inline ChordalityResult chordality(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexMask numbered = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if ((numbered >> v) & 1) continue;
            if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])
                pick = v;
        }
        numbered |= vertex_bit(pick);
        order.push_back(pick);
        for (VertexMask m = g.neighbors(pick) & ~numbered; m != 0; m &= m - 1)
            ++weight[static_cast<std::size_t>(std::countr_zero(m))];
    }

    VertexMask earlier = 0;
    bool ok = true;
    for (int v : order) {
        if (!detail::is_clique_mask(g, g.neighbors(v) & earlier)) {
            ok = false;
            break;
        }
        earlier |= vertex_bit(v);
    }
    if (ok) return {true, std::move(order), std::nullopt};
    auto cycle = detail::find_induced_long_cycle(g);
    if (!cycle) throw std::logic_error("chordality: elimination check failed but no induced cycle found");
    return {false, std::nullopt, std::move(cycle)};
}

/// The invariants of the extremal equality for one graph. gap is
/// (n + 2 - kappa) - (free_count + diameter) and is only defined for
/// connected non-complete graphs.
struct InvariantReport {
    int n = 0;
    int diameter = kInfiniteDistance;  // kInfiniteDistance when disconnected
    int kappa = 0;
    std::vector<int> free_set;  // ascending, 0-based
    int free_count = 0;
    bool is_connected = false;
    bool is_complete = false;
    bool is_chordal = false;
    std::optional<int> gap;
};

inline InvariantReport invariant_report(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("invariant_report: undefined for graphs with fewer than 2 vertices");
    InvariantReport r;
    r.n = g.vertex_count();
    r.is_connected = is_connected(g);
    r.is_complete = is_complete(g);
    r.diameter = diameter(g);
    r.kappa = kappa(g);
    r.free_set = mask_to_vertices(free_vertices(g));
    r.free_count = static_cast<int>(r.free_set.size());
    r.is_chordal = chordality(g).is_chordal;
    if (r.is_connected && !r.is_complete)
        r.gap = (r.n + 2 - r.kappa) - (r.free_count + r.diameter);
    return r;
}

namespace detail {

inline std::string join_labels(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(vs[i] + 1);  // 1-based labels in output
    }
    return out;
}

}  // namespace detail

inline std::string to_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "n: " << r.n << '\n';
    os << "diameter: ";
    if (r.diameter == kInfiniteDistance)
        os << "infinite";
    else
        os << r.diameter;
    os << '\n';
    os << "kappa: " << r.kappa << '\n';
    os << "free_set:" << (r.free_set.empty() ? "" : " " + detail::join_labels(r.free_set)) << '\n';
    os << "free_count: " << r.free_count << '\n';
    os << "is_connected: " << (r.is_connected ? "true" : "false") << '\n';
    os << "is_complete: " << (r.is_complete ? "true" : "false") << '\n';
    os << "is_chordal: " << (r.is_chordal ? "true" : "false") << '\n';
    if (r.gap) os << "gap: " << *r.gap << '\n';
    return os.str();
}

inline std::string to_record(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    if (r.diameter == kInfiniteDistance)
        j["diameter"] = nullptr;
    else
        j["diameter"] = r.diameter;
    j["kappa"] = r.kappa;
    auto labels = r.free_set;
    for (int& v : labels) ++v;
    j["free_set"] = labels;
    j["free_count"] = r.free_count;
    j["is_connected"] = r.is_connected;
    j["is_complete"] = r.is_complete;
    j["is_chordal"] = r.is_chordal;
    if (r.gap) j["gap"] = *r.gap;
    return j.dump();
}

}  // namespace extremal

#endif  // EXTREMAL_INVARIANTS_HPP
