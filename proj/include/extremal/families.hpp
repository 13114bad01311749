#ifndef EXTREMAL_FAMILIES_HPP
#define EXTREMAL_FAMILIES_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Path of length d with f-2 extra leaves on its second vertex. The result
/// has n = d + f - 1 vertices and realizes connectivity 1, f free vertices
/// and diameter d.
inline Graph build_gamma(int d, int f) {
    if (d < 2) throw std::invalid_argument("build_gamma: d must be >= 2");
    if (f < 2) throw std::invalid_argument("build_gamma: f must be >= 2");
    const int n = d + f - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
    for (int leaf = d + 1; leaf < n; ++leaf) edges.emplace_back(1, leaf);
    return Graph(n, edges);
}

/// Two complete graphs K_{q+s} and K_{q+t} overlapping in a shared K_q.
/// Realizes connectivity q, s+t free vertices and diameter 2.
inline Graph build_omega(int q, int s, int t) {
    if (q < 2) throw std::invalid_argument("build_omega: q must be >= 2");
    if (s < 1 || t < 1) throw std::invalid_argument("build_omega: s and t must be >= 1");
    std::vector<int> left_labels(static_cast<std::size_t>(q + s));
    std::iota(left_labels.begin(), left_labels.end(), 1);
    std::vector<int> right_labels;
    for (int i = 1; i <= q; ++i) right_labels.push_back(i);
    for (int i = q + s + 1; i <= q + s + t; ++i) right_labels.push_back(i);
    return graph_union(complete_graph(q + s), left_labels, complete_graph(q + t), right_labels);
}

/// Construction data for a member of the Gd family: an induced path
/// v,u_1,...,u_{d-1},w with a clique hanging off each end (hv_size, hw_size)
/// and families of cliques attached to one interior vertex
/// (single_cliques[i-1] lists the sizes at u_i) or to a consecutive pair
/// (pair_cliques[j-1] lists the sizes at {u_j, u_{j+1}}).
struct GdSpec {
    int d = 2;
    int hv_size = 0;
    int hw_size = 0;
    std::vector<std::vector<int>> single_cliques;  // exactly d-1 entries
    std::vector<std::vector<int>> pair_cliques;    // exactly d-2 entries

    int total_vertices() const {
        int n = d + 1 + hv_size + hw_size;
        for (const auto& sizes : single_cliques)
            for (int s : sizes) n += s;
        for (const auto& sizes : pair_cliques)
            for (int s : sizes) n += s;
        return n;
    }

    bool operator==(const GdSpec&) const = default;
};

inline void validate(const GdSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("GdSpec: d must be >= 2");
    if (spec.hv_size < 0 || spec.hw_size < 0)
        throw std::invalid_argument("GdSpec: clique sizes must be nonnegative");
    if (static_cast<int>(spec.single_cliques.size()) != spec.d - 1)
        throw std::invalid_argument("GdSpec: single_cliques must have exactly d-1 entries");
    if (static_cast<int>(spec.pair_cliques.size()) != spec.d - 2)
        throw std::invalid_argument("GdSpec: pair_cliques must have exactly d-2 entries");
    for (const auto& sizes : spec.single_cliques)
        for (int s : sizes)
            if (s < 1) throw std::invalid_argument("GdSpec: clique sizes must be >= 1");
    for (const auto& sizes : spec.pair_cliques)
        for (int s : sizes)
            if (s < 1) throw std::invalid_argument("GdSpec: clique sizes must be >= 1");
}

/// Construction data for a member of the Fq family: K_q joined with p >= 2
/// disjoint cliques of the given sizes.
struct FqSpec {
    int q = 2;
    std::vector<int> part_sizes;

    int total_vertices() const {
        int n = q;
        for (int s : part_sizes) n += s;
        return n;
    }

    bool operator==(const FqSpec&) const = default;
};

inline void validate(const FqSpec& spec) {
    if (spec.q < 2) throw std::invalid_argument("FqSpec: q must be >= 2");
    if (spec.part_sizes.size() < 2) throw std::invalid_argument("FqSpec: need at least 2 parts");
    for (int s : spec.part_sizes)
        if (s < 1) throw std::invalid_argument("FqSpec: part sizes must be >= 1");
}

/// Builds the Gd member described by the spec. Vertex labels in order:
/// v, u_1..u_{d-1}, w, then the v-side clique, the w-side clique, then the
/// single-attachment cliques by position, then the pair-attachment cliques.
inline Graph build_gd(const GdSpec& spec) {
    validate(spec);
    const int d = spec.d;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < d; ++i) edges.emplace_back(i, i + 1);  // v=0, u_i=i, w=d

    int next = d + 1;
    auto add_clique = [&edges, &next](int size, const std::vector<int>& attach) {
        const int first = next;
        next += size;
        for (int a = first; a < next; ++a) {
            for (int b = a + 1; b < next; ++b) edges.emplace_back(a, b);
            for (int u : attach) edges.emplace_back(a, u);
        }
    };
    add_clique(spec.hv_size, {0, 1});
    add_clique(spec.hw_size, {d - 1, d});
    for (int i = 1; i <= d - 1; ++i)
        for (int size : spec.single_cliques[static_cast<std::size_t>(i - 1)]) add_clique(size, {i});
    for (int j = 1; j <= d - 2; ++j)
        for (int size : spec.pair_cliques[static_cast<std::size_t>(j - 1)]) add_clique(size, {j, j + 1});
    return Graph(next, edges);
}

/// Builds the Fq member described by the spec; the K_q core takes labels
/// 0..q-1, parts follow in spec order.
inline Graph build_fq(const FqSpec& spec) {
    validate(spec);
    Graph parts(0);
    for (int size : spec.part_sizes) parts = disjoint_union(parts, complete_graph(size));
    return graph_join(complete_graph(spec.q), parts);
}

// ---------------------------------------------------------------------------
// One-line spec text forms, e.g.
//   gd: "d=7; hv=2; hw=0; H1=1,1; H5=2,1,1,1; H23=2,1; H34=2"
//   fq: "q=3; parts=1,1,2"
// Pair keys may also be written with an underscore ("H2_3"); the juxtaposed
// digit form is resolved as a single index first, so families at positions
// >= 10 require the underscore form for pairs.

namespace detail {

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

inline int parse_spec_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("spec: bad integer for ") + what);
    }
    if (pos != s.size()) throw std::invalid_argument(std::string("spec: bad integer for ") + what);
    return value;
}

inline std::vector<int> parse_spec_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string item = trim(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (item.empty()) throw std::invalid_argument(std::string("spec: empty list item for ") + what);
        out.push_back(parse_spec_int(item, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::vector<std::pair<std::string, std::string>> parse_spec_entries(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::size_t start = 0;
    const std::string s(text);
    while (start <= s.size()) {
        const auto semi = s.find(';', start);
        const std::string entry = trim(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
        if (!entry.empty()) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("spec: expected key=value entries separated by ';'");
            entries.emplace_back(trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return entries;
}

}  // namespace detail

inline GdSpec parse_gd_spec(std::string_view text) {
    GdSpec spec;
    int d = -1;
    std::map<std::string, std::string> pending;
    for (auto& [key, value] : detail::parse_spec_entries(text)) {
        if (!pending.emplace(key, value).second)
            throw std::invalid_argument("gd spec: duplicate key " + key);
        if (key == "d") d = detail::parse_spec_int(value, "d");
    }
    if (d < 0) throw std::invalid_argument("gd spec: missing d");
    if (d < 2) throw std::invalid_argument("gd spec: d must be >= 2");
    spec.d = d;
    spec.single_cliques.assign(static_cast<std::size_t>(d - 1), {});
    spec.pair_cliques.assign(static_cast<std::size_t>(std::max(0, d - 2)), {});

    for (auto& [key, value] : pending) {
        if (key == "d") continue;
        if (key == "hv") {
            spec.hv_size = detail::parse_spec_int(value, "hv");
        } else if (key == "hw") {
            spec.hw_size = detail::parse_spec_int(value, "hw");
        } else if (key.size() > 1 && key[0] == 'H') {
            const std::string idx = key.substr(1);
            const auto sizes = detail::parse_spec_int_list(value, key.c_str());
            auto place = [&key](std::vector<std::vector<int>>& slots, int position,
                                const std::vector<int>& v) {
                auto& slot = slots[static_cast<std::size_t>(position - 1)];
                if (!slot.empty())
                    throw std::invalid_argument("gd spec: position of " + key + " set twice");
                slot = v;
            };
            const auto underscore = idx.find('_');
            if (underscore != std::string::npos) {
                const int a = detail::parse_spec_int(idx.substr(0, underscore), key.c_str());
                const int b = detail::parse_spec_int(idx.substr(underscore + 1), key.c_str());
                if (b != a + 1 || a < 1 || a > d - 2)
                    throw std::invalid_argument("gd spec: pair key must name consecutive interior positions: " + key);
                place(spec.pair_cliques, a, sizes);
                continue;
            }
            if (idx.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("gd spec: malformed key " + key);
            const int whole = detail::parse_spec_int(idx, key.c_str());
            if (whole >= 1 && whole <= d - 1) {
                place(spec.single_cliques, whole, sizes);
                continue;
            }
            bool placed = false;
            for (std::size_t cut = 1; cut < idx.size() && !placed; ++cut) {
                const int a = detail::parse_spec_int(idx.substr(0, cut), key.c_str());
                const int b = detail::parse_spec_int(idx.substr(cut), key.c_str());
                if (b == a + 1 && a >= 1 && a <= d - 2) {
                    place(spec.pair_cliques, a, sizes);
                    placed = true;
                }
            }
            if (!placed) throw std::invalid_argument("gd spec: family index out of range in " + key);
        } else {
            throw std::invalid_argument("gd spec: unknown key " + key);
        }
    }
    validate(spec);
    return spec;
}

inline FqSpec parse_fq_spec(std::string_view text) {
    FqSpec spec;
    bool have_q = false, have_parts = false;
    for (auto& [key, value] : detail::parse_spec_entries(text)) {
        if (key == "q") {
            if (have_q) throw std::invalid_argument("fq spec: duplicate key q");
            spec.q = detail::parse_spec_int(value, "q");
            have_q = true;
        } else if (key == "parts") {
            if (have_parts) throw std::invalid_argument("fq spec: duplicate key parts");
            spec.part_sizes = detail::parse_spec_int_list(value, "parts");
            have_parts = true;
        } else {
            throw std::invalid_argument("fq spec: unknown key " + key);
        }
    }
    if (!have_q) throw std::invalid_argument("fq spec: missing q");
    if (!have_parts) throw std::invalid_argument("fq spec: missing parts");
    validate(spec);
    return spec;
}

}  // namespace extremal

#endif  // EXTREMAL_FAMILIES_HPP
