#ifndef EXTREMAL_VERIFY_HPP
#define EXTREMAL_VERIFY_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "extremal/classify.hpp"
#include "extremal/graph.hpp"
#include "extremal/invariants.hpp"
#include "extremal/io.hpp"

namespace extremal {

/// Streams all connected labeled graphs on n vertices, walking the
/// 2^(n(n-1)/2) edge masks in ascending numeric order. Bit t of a mask is
/// the t-th pair in the order (0,1),(0,2),...,(0,n-1),(1,2),...
class ConnectedGraphEnumerator {
public:
    static int edge_bit_count(int n) { return n * (n - 1) / 2; }
    static std::uint64_t mask_count(int n) { return std::uint64_t{1} << edge_bit_count(n); }

    explicit ConnectedGraphEnumerator(int n) : ConnectedGraphEnumerator(n, 0, mask_count(n)) {}

    ConnectedGraphEnumerator(int n, std::uint64_t first_mask, std::uint64_t last_mask)
        : n_(n), next_(first_mask), last_(last_mask) {
        if (n < 2 || n > 8)
            throw std::invalid_argument("ConnectedGraphEnumerator: n must be in 2..8");
        if (last_mask > mask_count(n) || first_mask > last_mask)
            throw std::invalid_argument("ConnectedGraphEnumerator: bad mask range");
    }

    static Graph graph_from_mask(int n, std::uint64_t mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    std::optional<Graph> next() {
        while (next_ < last_) {
            Graph g = graph_from_mask(n_, next_++);
            if (is_connected(g)) return g;
        }
        return std::nullopt;
    }

private:
    int n_;
    std::uint64_t next_;
    std::uint64_t last_;
};

/// Aggregate outcome of one exhaustive run. The three violation lists hold
/// graph6 strings and must all stay empty for the classification results to
/// hold.
struct VerificationSummary {
    int n = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t connected = 0;
    std::uint64_t non_complete_connected = 0;
    std::uint64_t extremal = 0;
    std::uint64_t gd_members = 0;
    std::uint64_t fq_members = 0;
    std::optional<int> min_gap;
    std::vector<std::string> mismatches;             // equality vs classification disagree
    std::vector<std::string> lemma_violations;       // gap = 0 with diameter >= 3 and kappa >= 2
    std::vector<std::string> chordality_violations;  // gap = 0 but not chordal
    std::set<std::array<int, 4>> realized_tuples;    // (n, q, f, d) with gap = 0
};

using ProgressFn = std::function<void(std::uint64_t masks_done, std::uint64_t masks_total)>;

namespace detail {

inline void tally_graph(VerificationSummary& acc, const Graph& g) {
    ++acc.connected;
    if (is_complete(g)) return;
    ++acc.non_complete_connected;
    const InvariantReport report = invariant_report(g);
    const Classification cls = classify(g, report);
    const bool equality = report.gap.value() == 0;
    const bool member = is_member(cls);
    if (!acc.min_gap || report.gap.value() < *acc.min_gap) acc.min_gap = report.gap;
    if (equality) {
        ++acc.extremal;
        acc.realized_tuples.insert({report.n, report.kappa, report.free_count, report.diameter});
        if (report.diameter >= 3 && report.kappa >= 2)
            acc.lemma_violations.push_back(encode_graph6(g));
        if (!report.is_chordal) acc.chordality_violations.push_back(encode_graph6(g));
    }
    if (std::holds_alternative<GdMember>(cls)) ++acc.gd_members;
    if (std::holds_alternative<FqMember>(cls)) ++acc.fq_members;
    if (equality != member) acc.mismatches.push_back(encode_graph6(g));
}

inline void merge_into(VerificationSummary& into, VerificationSummary&& part) {
    into.connected += part.connected;
    into.non_complete_connected += part.non_complete_connected;
    into.extremal += part.extremal;
    into.gd_members += part.gd_members;
    into.fq_members += part.fq_members;
    if (part.min_gap && (!into.min_gap || *part.min_gap < *into.min_gap)) into.min_gap = part.min_gap;
    auto append = [](std::vector<std::string>& dst, std::vector<std::string>& src) {
        dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
    };
    append(into.mismatches, part.mismatches);
    append(into.lemma_violations, part.lemma_violations);
    append(into.chordality_violations, part.chordality_violations);
    into.realized_tuples.insert(part.realized_tuples.begin(), part.realized_tuples.end());
}

}  // namespace detail

/// Runs the full classification check over every connected labeled graph on
/// n vertices. Work units fix the top bits of the edge mask; merging is
/// order-insensitive, so the result is identical for any worker count.
inline VerificationSummary verify_classification(int n, int jobs = 1, const ProgressFn& progress = {}) {
    if (n < 2 || n > 8) throw std::invalid_argument("verify_classification: n must be in 2..8");
    if (jobs < 1) throw std::invalid_argument("verify_classification: jobs must be >= 1");

    const int bits = ConnectedGraphEnumerator::edge_bit_count(n);
    const std::uint64_t total = ConnectedGraphEnumerator::mask_count(n);
    const int unit_bits = std::min(bits, 10);
    const std::uint64_t units = std::uint64_t{1} << unit_bits;
    const std::uint64_t span = total >> unit_bits;

    std::atomic<std::uint64_t> next_unit{0};
    std::atomic<std::uint64_t> masks_done{0};
    std::mutex progress_mutex;
    std::vector<VerificationSummary> partials(static_cast<std::size_t>(jobs));

    auto worker = [&](int index) {
        VerificationSummary& acc = partials[static_cast<std::size_t>(index)];
        for (;;) {
            const std::uint64_t unit = next_unit.fetch_add(1);
            if (unit >= units) break;
            ConnectedGraphEnumerator en(n, unit * span, (unit + 1) * span);
            while (auto g = en.next()) detail::tally_graph(acc, *g);
            if (progress) {
                const std::uint64_t done = masks_done.fetch_add(span) + span;
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(done, total);
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker, i);
        for (auto& t : threads) t.join();
    }

    VerificationSummary summary;
    summary.n = n;
    summary.total_graphs = total;
    for (auto& part : partials) detail::merge_into(summary, std::move(part));
    std::sort(summary.mismatches.begin(), summary.mismatches.end());
    std::sort(summary.lemma_violations.begin(), summary.lemma_violations.end());
    std::sort(summary.chordality_violations.begin(), summary.chordality_violations.end());
    return summary;
}

/// All tuples (n, q, f, d) with f + d = n + 2 - q, q >= 1, f >= 0, d >= 1
/// that realizable_sequence accepts.
inline std::set<std::array<int, 4>> predicted_tuples(int n) {
    std::set<std::array<int, 4>> out;
    for (int q = 1; q <= n + 1; ++q)
        for (int d = 1; d <= n + 2 - q; ++d) {
            const int f = n + 2 - q - d;
            if (realizable_sequence(n, q, f, d)) out.insert({n, q, f, d});
        }
    return out;
}

struct SequenceCheck {
    int n = 0;
    std::set<std::array<int, 4>> realized;
    std::set<std::array<int, 4>> predicted;
    bool agree = false;
};

inline SequenceCheck verify_sequences(const VerificationSummary& summary) {
    SequenceCheck check;
    check.n = summary.n;
    check.realized = summary.realized_tuples;
    check.predicted = predicted_tuples(summary.n);
    check.agree = check.realized == check.predicted;
    return check;
}

inline SequenceCheck verify_sequences(int n, int jobs = 1) {
    return verify_sequences(verify_classification(n, jobs));
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline std::string format_tuples(const std::set<std::array<int, 4>>& tuples) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : tuples) {
        if (!first) os << ' ';
        first = false;
        os << '(' << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ')';
    }
    return os.str();
}

inline void append_list(std::ostringstream& os, const char* key, const std::vector<std::string>& items) {
    os << key << ": " << items.size() << '\n';
    for (const auto& item : items) os << "  " << item << '\n';
}

inline nlohmann::ordered_json tuples_to_json(const std::set<std::array<int, 4>>& tuples) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : tuples) arr.push_back({t[0], t[1], t[2], t[3]});
    return arr;
}

}  // namespace detail

inline std::string to_text(const VerificationSummary& s) {
    std::ostringstream os;
    os << "n: " << s.n << '\n';
    os << "total_graphs: " << s.total_graphs << '\n';
    os << "connected: " << s.connected << '\n';
    os << "non_complete_connected: " << s.non_complete_connected << '\n';
    os << "extremal: " << s.extremal << '\n';
    os << "gd_members: " << s.gd_members << '\n';
    os << "fq_members: " << s.fq_members << '\n';
    if (s.min_gap) os << "min_gap: " << *s.min_gap << '\n';
    detail::append_list(os, "mismatches", s.mismatches);
    detail::append_list(os, "lemma_violations", s.lemma_violations);
    detail::append_list(os, "chordality_violations", s.chordality_violations);
    os << "realized_tuples:" << (s.realized_tuples.empty() ? "" : " " + detail::format_tuples(s.realized_tuples))
       << '\n';
    return os.str();
}

inline std::string to_record(const VerificationSummary& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["total_graphs"] = s.total_graphs;
    j["connected"] = s.connected;
    j["non_complete_connected"] = s.non_complete_connected;
    j["extremal"] = s.extremal;
    j["gd_members"] = s.gd_members;
    j["fq_members"] = s.fq_members;
    if (s.min_gap)
        j["min_gap"] = *s.min_gap;
    else
        j["min_gap"] = nullptr;
    j["mismatches"] = s.mismatches;
    j["lemma_violations"] = s.lemma_violations;
    j["chordality_violations"] = s.chordality_violations;
    j["realized_tuples"] = detail::tuples_to_json(s.realized_tuples);
    return j.dump();
}

inline std::string to_text(const SequenceCheck& c) {
    std::ostringstream os;
    os << "n: " << c.n << '\n';
    os << "predicted:" << (c.predicted.empty() ? "" : " " + detail::format_tuples(c.predicted)) << '\n';
    os << "realized:" << (c.realized.empty() ? "" : " " + detail::format_tuples(c.realized)) << '\n';
    os << "agree: " << (c.agree ? "true" : "false") << '\n';
    return os.str();
}

inline std::string to_record(const SequenceCheck& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["predicted"] = detail::tuples_to_json(c.predicted);
    j["realized"] = detail::tuples_to_json(c.realized);
    j["agree"] = c.agree;
    return j.dump();
}

}  // namespace extremal

#endif  // EXTREMAL_VERIFY_HPP
