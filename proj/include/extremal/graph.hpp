#ifndef EXTREMAL_GRAPH_HPP
#define EXTREMAL_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace extremal {

// Adjacency rows are single machine words, which caps graphs at 64 vertices
// (graph6 I/O narrows this further to 62).
inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

inline VertexMask low_bits(int n) {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

inline VertexMask vertices_to_mask(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) m |= vertex_bit(v);
    return m;
}

/// Immutable simple undirected graph on vertices 0..n-1. Vertex ids are
/// 0-based internally; all text I/O uses 1-based labels.
class Graph {
public:
    explicit Graph(int n) : n_(checked_size(n)), adj_(static_cast<std::size_t>(n_), 0) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs) : Graph(n) {
        for (auto [i, j] : edge_pairs) {
            if (i < 0 || i >= n_ || j < 0 || j >= n_)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (i == j) throw std::invalid_argument("Graph: loops are not allowed");
            adj_[static_cast<std::size_t>(i)] |= vertex_bit(j);
            adj_[static_cast<std::size_t>(j)] |= vertex_bit(i);
        }
    }

    int vertex_count() const { return n_; }

    VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int i, int j) const { return (neighbors(i) >> j) & 1; }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    VertexMask vertex_mask() const { return low_bits(n_); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    /// Edges as (i, j) with i < j, ascending lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int i = 0; i < n_; ++i)
            for (VertexMask m = neighbors(i) & ~low_bits(i + 1); m != 0; m &= m - 1)
                out.emplace_back(i, std::countr_zero(m));
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    static int checked_size(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count must be in 0..64");
        return n;
    }

    int n_;
    std::vector<VertexMask> adj_;
};

/// Path on k vertices, edges {i, i+1}. k = 1 is a single vertex.
inline Graph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path_graph: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

/// Complete graph on k vertices; k = 0 is the empty graph.
inline Graph complete_graph(int k) {
    if (k < 0) throw std::invalid_argument("complete_graph: negative vertex count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Graph(k, edges);
}

/// Union of two labeled graphs. Vertices carrying the same label are
/// identified; the result is relabeled to 0..n-1 preserving label order.
inline Graph graph_union(const Graph& g, const std::vector<int>& g_labels,
                         const Graph& h, const std::vector<int>& h_labels) {
    if (static_cast<int>(g_labels.size()) != g.vertex_count() ||
        static_cast<int>(h_labels.size()) != h.vertex_count())
        throw std::invalid_argument("graph_union: label map size must match vertex count");
    auto check_injective = [](const std::vector<int>& m) {
        std::vector<int> s = m;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("graph_union: label map assigns one label twice");
    };
    check_injective(g_labels);
    check_injective(h_labels);

    std::vector<int> labels = g_labels;
    labels.insert(labels.end(), h_labels.begin(), h_labels.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto index_of = [&labels](int label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                                labels.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g.edges()) edges.emplace_back(index_of(g_labels[i]), index_of(g_labels[j]));
    for (auto [i, j] : h.edges()) edges.emplace_back(index_of(h_labels[i]), index_of(h_labels[j]));
    return Graph(static_cast<int>(labels.size()), edges);
}

/// Disjoint union; h's vertices are appended after g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int off = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [i, j] : h.edges()) edges.emplace_back(i + off, j + off);
    return Graph(off + h.vertex_count(), edges);
}

/// Join product: disjoint union plus every cross edge.
inline Graph graph_join(const Graph& g, const Graph& h) {
    const int off = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [i, j] : h.edges()) edges.emplace_back(i + off, j + off);
    for (int i = 0; i < off; ++i)
        for (int j = 0; j < h.vertex_count(); ++j) edges.emplace_back(i, j + off);
    return Graph(off + h.vertex_count(), edges);
}

/// Subgraph induced by the kept vertex set, relabeled to 0..|keep|-1
/// preserving the original order.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
    if ((keep & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    const std::vector<int> kept = mask_to_vertices(keep);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = a + 1; b < kept.size(); ++b)
            if (g.has_edge(kept[a], kept[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(kept.size()), edges);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    VertexMask m = 0;
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        m |= vertex_bit(v);
    }
    return induced_subgraph(g, m);
}

}  // namespace extremal

#endif  // EXTREMAL_GRAPH_HPP
