#ifndef EXTREMAL_CLASSIFY_HPP
#define EXTREMAL_CLASSIFY_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "extremal/families.hpp"
#include "extremal/graph.hpp"
#include "extremal/invariants.hpp"

namespace extremal {

/// One clique hanging off the certificate path: its vertices and the
/// interior path vertices (one, or two consecutive) every member is joined
/// to.
struct CliqueComponent {
    std::vector<int> vertices;    // ascending
    std::vector<int> attachment;  // in path order
    bool operator==(const CliqueComponent&) const = default;
};

/// Certificate of Gd membership: the induced path v,u_1..u_{d-1},w whose
/// interior is exactly the non-free set, plus the clique components of the
/// rest.
struct GdCertificate {
    std::vector<int> path;
    std::vector<CliqueComponent> components;
    bool operator==(const GdCertificate&) const = default;
};

/// Certificate of Fq membership: the universal core and the clique parts it
/// is joined to.
struct FqCertificate {
    std::vector<int> core;                 // ascending
    std::vector<std::vector<int>> parts;   // each ascending, ordered by first vertex
    bool operator==(const FqCertificate&) const = default;
};

struct NotExtremal {
    int gap = 0;
    bool operator==(const NotExtremal&) const = default;
};

struct GdMember {
    int d = 0;
    GdCertificate certificate;
    bool operator==(const GdMember&) const = default;
};

struct FqMember {
    int q = 0;
    FqCertificate certificate;
    bool operator==(const FqMember&) const = default;
};

using Classification = std::variant<NotExtremal, GdMember, FqMember>;

inline bool is_member(const Classification& c) {
    return !std::holds_alternative<NotExtremal>(c);
}

namespace detail {

inline std::vector<VertexMask> components_of(const Graph& g, VertexMask sub) {
    std::vector<VertexMask> comps;
    VertexMask rest = sub;
    while (rest != 0) {
        const VertexMask seed = rest & (~rest + 1);
        const VertexMask comp = reach_from(g, seed, sub);
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

// Orders the vertices of `u_set` along a path if they induce one.
inline std::optional<std::vector<int>> path_order_of(const Graph& g, VertexMask u_set) {
    const auto members = mask_to_vertices(u_set);
    const int k = static_cast<int>(members.size());
    if (k == 1) return members;
    int edge_twice = 0;
    std::vector<int> endpoints;
    for (int v : members) {
        const int deg = std::popcount(g.neighbors(v) & u_set);
        if (deg > 2) return std::nullopt;
        if (deg <= 1) endpoints.push_back(v);
        edge_twice += deg;
    }
    if (edge_twice != 2 * (k - 1) || endpoints.size() != 2) return std::nullopt;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k));
    int prev = -1, cur = endpoints.front();
    for (int step = 0; step < k; ++step) {
        order.push_back(cur);
        VertexMask next = g.neighbors(cur) & u_set;
        if (prev >= 0) next &= ~vertex_bit(prev);
        prev = cur;
        if (next == 0) break;
        cur = std::countr_zero(next);
    }
    if (static_cast<int>(order.size()) != k) return std::nullopt;  // u_set not connected
    return order;
}

struct GdComponentScan {
    VertexMask verts = 0;
    VertexMask att = 0;
};

// Structural Gd test working from the non-free set alone: it must induce a
// path, every remaining component must be a clique joined to exactly one
// interior vertex or a consecutive pair, and both path endpoints must own a
// component of their own (the v and w side).
inline std::optional<GdCertificate> try_gd_certificate(const Graph& g, VertexMask nonfree) {
    if (nonfree == 0) return std::nullopt;
    auto order = path_order_of(g, nonfree);
    if (!order) return std::nullopt;
    const int k = static_cast<int>(order->size());

    std::vector<GdComponentScan> comps;
    for (VertexMask comp : components_of(g, g.vertex_mask() & ~nonfree)) {
        if (!is_clique_mask(g, comp)) return std::nullopt;
        VertexMask att = 0;
        for (VertexMask m = comp; m != 0; m &= m - 1)
            att |= g.neighbors(std::countr_zero(m)) & nonfree;
        for (VertexMask m = comp; m != 0; m &= m - 1)
            if ((g.neighbors(std::countr_zero(m)) & nonfree) != att) return std::nullopt;
        comps.push_back({comp, att});
    }

    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int idx = 0; idx < k; ++idx) pos[static_cast<std::size_t>((*order)[idx])] = idx;
    for (const auto& c : comps) {
        const int cnt = std::popcount(c.att);
        if (cnt < 1 || cnt > 2) return std::nullopt;
        if (cnt == 2) {
            const auto us = mask_to_vertices(c.att);
            const int a = pos[static_cast<std::size_t>(us[0])];
            const int b = pos[static_cast<std::size_t>(us[1])];
            if (std::max(a, b) != std::min(a, b) + 1) return std::nullopt;
        }
    }

    // Both path ends need a component attached to them alone; those
    // components host the path endpoints v and w.
    int v = -1, w = -1;
    if (k == 1) {
        if (comps.size() < 2) return std::nullopt;
        int lowest = -1, second = -1;
        for (const auto& c : comps) {
            const int lo = std::countr_zero(c.verts);
            if (lowest < 0 || lo < lowest) {
                second = lowest;
                lowest = lo;
            } else if (second < 0 || lo < second) {
                second = lo;
            }
        }
        v = lowest;
        w = second;
    } else {
        const VertexMask first_bit = vertex_bit(order->front());
        const VertexMask last_bit = vertex_bit(order->back());
        int best_front = -1, best_back = -1;
        for (const auto& c : comps) {
            if (c.att == first_bit) {
                const int lo = std::countr_zero(c.verts);
                if (best_front < 0 || lo < best_front) best_front = lo;
            } else if (c.att == last_bit) {
                const int lo = std::countr_zero(c.verts);
                if (best_back < 0 || lo < best_back) best_back = lo;
            }
        }
        if (best_front < 0 || best_back < 0) return std::nullopt;
        // Canonical orientation: lowest-labeled endpoint component first.
        if (best_back < best_front) {
            std::reverse(order->begin(), order->end());
            std::swap(best_front, best_back);
            for (int idx = 0; idx < k; ++idx) pos[static_cast<std::size_t>((*order)[idx])] = idx;
        }
        v = best_front;
        w = best_back;
    }

    GdCertificate cert;
    cert.path.reserve(static_cast<std::size_t>(k + 2));
    cert.path.push_back(v);
    cert.path.insert(cert.path.end(), order->begin(), order->end());
    cert.path.push_back(w);
    std::sort(comps.begin(), comps.end(), [](const GdComponentScan& a, const GdComponentScan& b) {
        return std::countr_zero(a.verts) < std::countr_zero(b.verts);
    });
    for (const auto& c : comps) {
        CliqueComponent out;
        out.vertices = mask_to_vertices(c.verts);
        out.attachment = mask_to_vertices(c.att);
        std::sort(out.attachment.begin(), out.attachment.end(),
                  [&pos](int a, int b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
        cert.components.push_back(std::move(out));
    }
    return cert;
}

// Structural Fq test: the non-free set must consist of >= 2 universal
// vertices and what remains must split into >= 2 clique components.
inline std::optional<FqCertificate> try_fq_certificate(const Graph& g, VertexMask nonfree) {
    if (std::popcount(nonfree) < 2) return std::nullopt;
    const VertexMask all = g.vertex_mask();
    for (VertexMask m = nonfree; m != 0; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (g.neighbors(u) != (all & ~vertex_bit(u))) return std::nullopt;
    }
    const auto comps = components_of(g, all & ~nonfree);
    if (comps.size() < 2) return std::nullopt;
    for (VertexMask comp : comps)
        if (!is_clique_mask(g, comp)) return std::nullopt;
    FqCertificate cert;
    cert.core = mask_to_vertices(nonfree);
    for (VertexMask comp : comps) cert.parts.push_back(mask_to_vertices(comp));
    std::sort(cert.parts.begin(), cert.parts.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return cert;
}

inline void check_classify_preconditions(const Graph& g, bool connected, bool complete) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("classify: need at least 3 vertices");
    if (!connected) throw std::invalid_argument("classify: graph must be connected");
    if (complete) throw std::invalid_argument("classify: graph must be non-complete");
}

}  // namespace detail

/// Structural classification of a connected non-complete graph, decided
/// purely from the non-free vertex set and never from the gap value. The
/// report must have been computed from g.
inline Classification classify(const Graph& g, const InvariantReport& report) {
    detail::check_classify_preconditions(g, report.is_connected, report.is_complete);
    const VertexMask nonfree = g.vertex_mask() & ~vertices_to_mask(report.free_set);
    if (auto cert = detail::try_gd_certificate(g, nonfree))
        return GdMember{std::popcount(nonfree) + 1, std::move(*cert)};
    if (auto cert = detail::try_fq_certificate(g, nonfree))
        return FqMember{std::popcount(nonfree), std::move(*cert)};
    return NotExtremal{report.gap.value()};
}

inline Classification classify(const Graph& g) {
    detail::check_classify_preconditions(g, is_connected(g), is_complete(g));
    const VertexMask nonfree = g.vertex_mask() & ~free_vertices(g);
    if (auto cert = detail::try_gd_certificate(g, nonfree))
        return GdMember{std::popcount(nonfree) + 1, std::move(*cert)};
    if (auto cert = detail::try_fq_certificate(g, nonfree))
        return FqMember{std::popcount(nonfree), std::move(*cert)};
    return NotExtremal{invariant_report(g).gap.value()};
}

/// True iff the graph attains free_count + diameter = n + 2 - kappa.
inline bool check_equality(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("check_equality: graph must be connected");
    if (is_complete(g)) throw std::invalid_argument("check_equality: graph must be non-complete");
    return invariant_report(g).gap.value() == 0;
}

/// Decides whether some connected non-complete graph attains the invariant
/// tuple (n, q, f, d) with f + d = n + 2 - q: possible exactly when q = 1
/// with f, d >= 2, or q >= 2 with f >= 2 and d = 2.
inline bool realizable_sequence(int n, int q, int f, int d) {
    if (f + d != n + 2 - q)
        throw std::invalid_argument("realizable_sequence: tuple must satisfy f + d = n + 2 - q");
    if (n >= 3 && q == 1 && f >= 2 && d >= 2) return true;
    if (n >= 4 && q >= 2 && f >= 2 && d == 2) return true;
    return false;
}

/// Produces a graph attaining a realizable tuple.
inline Graph witness_for_sequence(int n, int q, int f, int d) {
    if (!realizable_sequence(n, q, f, d))
        throw std::invalid_argument("witness_for_sequence: tuple is not realizable");
    if (q == 1) return build_gamma(d, f);
    return build_omega(q, 1, f - 1);
}

/// Depth of S/J_G predicted by classification membership: n+1 for Gd
/// members, n+2-q for Fq members, absent otherwise.
inline std::optional<int> predicted_depth(const Classification& c, int n) {
    if (std::holds_alternative<GdMember>(c)) return n + 1;
    if (const auto* fq = std::get_if<FqMember>(&c)) return n + 2 - fq->q;
    return std::nullopt;
}

/// Independent re-check of every GdCertificate invariant against the graph.
inline bool validate_certificate(const Graph& g, const GdCertificate& cert) {
    const int n = g.vertex_count();
    const auto& path = cert.path;
    if (path.size() < 3) return false;
    VertexMask path_mask = 0;
    for (int v : path) {
        if (v < 0 || v >= n || (path_mask & vertex_bit(v))) return false;
        path_mask |= vertex_bit(v);
    }
    for (std::size_t a = 0; a < path.size(); ++a)
        for (std::size_t b = a + 1; b < path.size(); ++b)
            if (g.has_edge(path[a], path[b]) != (b == a + 1)) return false;  // induced path

    VertexMask interior = path_mask & ~vertex_bit(path.front()) & ~vertex_bit(path.back());
    if ((g.vertex_mask() & ~free_vertices(g)) != interior) return false;

    VertexMask covered = 0;
    for (const auto& comp : cert.components) {
        const VertexMask verts = vertices_to_mask(comp.vertices);
        if ((verts & covered) || (verts & interior) || verts == 0) return false;
        covered |= verts;
        if (!detail::is_clique_mask(g, verts)) return false;
        const VertexMask att = vertices_to_mask(comp.attachment);
        if ((att & ~interior) || comp.attachment.empty() || comp.attachment.size() > 2) return false;
        if (comp.attachment.size() == 2 && !g.has_edge(comp.attachment[0], comp.attachment[1]))
            return false;  // attachment pair must be consecutive on the path
        for (int v : comp.vertices)
            if ((g.neighbors(v) & interior) != att) return false;
    }
    if (covered != (g.vertex_mask() & ~interior)) return false;

    const int u_first = path[1];
    const int u_last = path[path.size() - 2];
    auto attached_exactly = [&cert](int u) {
        int count = 0;
        for (const auto& comp : cert.components)
            if (comp.attachment.size() == 1 && comp.attachment[0] == u) ++count;
        return count;
    };
    if (u_first == u_last) {
        if (attached_exactly(u_first) < 2) return false;
    } else {
        if (attached_exactly(u_first) < 1 || attached_exactly(u_last) < 1) return false;
    }
    return true;
}

/// Independent re-check of every FqCertificate invariant against the graph.
inline bool validate_certificate(const Graph& g, const FqCertificate& cert) {
    const VertexMask core = vertices_to_mask(cert.core);
    if (std::popcount(core) < 2 || cert.core.size() != static_cast<std::size_t>(std::popcount(core)))
        return false;
    const VertexMask all = g.vertex_mask();
    if (core & ~all) return false;
    for (int u : cert.core)
        if (g.neighbors(u) != (all & ~vertex_bit(u))) return false;
    if ((all & ~free_vertices(g)) != core) return false;
    const auto comps = detail::components_of(g, all & ~core);
    if (comps.size() != cert.parts.size() || comps.size() < 2) return false;
    std::vector<VertexMask> claimed;
    for (const auto& part : cert.parts) claimed.push_back(vertices_to_mask(part));
    std::sort(claimed.begin(), claimed.end());
    std::vector<VertexMask> actual(comps.begin(), comps.end());
    std::sort(actual.begin(), actual.end());
    if (claimed != actual) return false;
    for (VertexMask comp : actual)
        if (!detail::is_clique_mask(g, comp)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Serialization (1-based labels)

inline std::string to_text(const Classification& c) {
    std::ostringstream os;
    if (const auto* ne = std::get_if<NotExtremal>(&c)) {
        os << "NOT_EXTREMAL gap=" << ne->gap;
    } else if (const auto* gd = std::get_if<GdMember>(&c)) {
        os << "GD d=" << gd->d << " path=" << detail::join_labels(gd->certificate.path)
           << " components=";
        for (const auto& comp : gd->certificate.components)
            os << '(' << detail::join_labels(comp.vertices) << ';' << detail::join_labels(comp.attachment) << ')';
    } else {
        const auto& fq = std::get<FqMember>(c);
        os << "FQ q=" << fq.q << " core=" << detail::join_labels(fq.certificate.core) << " parts=";
        for (const auto& part : fq.certificate.parts) os << '(' << detail::join_labels(part) << ')';
    }
    return os.str();
}

inline std::string to_record(const Classification& c, int n) {
    nlohmann::ordered_json j;
    auto one_based = [](const std::vector<int>& vs) {
        std::vector<int> out = vs;
        for (int& v : out) ++v;
        return out;
    };
    if (const auto* ne = std::get_if<NotExtremal>(&c)) {
        j["kind"] = "NOT_EXTREMAL";
        j["gap"] = ne->gap;
    } else if (const auto* gd = std::get_if<GdMember>(&c)) {
        j["kind"] = "GD";
        j["d"] = gd->d;
        j["path"] = one_based(gd->certificate.path);
        auto comps = nlohmann::ordered_json::array();
        for (const auto& comp : gd->certificate.components) {
            nlohmann::ordered_json cj;
            cj["vertices"] = one_based(comp.vertices);
            cj["attachment"] = one_based(comp.attachment);
            comps.push_back(std::move(cj));
        }
        j["components"] = std::move(comps);
    } else {
        const auto& fq = std::get<FqMember>(c);
        j["kind"] = "FQ";
        j["q"] = fq.q;
        j["core"] = one_based(fq.certificate.core);
        auto parts = nlohmann::ordered_json::array();
        for (const auto& part : fq.certificate.parts) parts.push_back(one_based(part));
        j["parts"] = std::move(parts);
    }
    const auto depth = predicted_depth(c, n);
    if (depth)
        j["predicted_depth"] = *depth;
    else
        j["predicted_depth"] = nullptr;
    return j.dump();
}

}  // namespace extremal

#endif  // EXTREMAL_CLASSIFY_HPP
