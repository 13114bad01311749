// Acceptance suite: runs every gate criterion exactly as stated and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.
//
// The heavy exhaustive scans share one verification pass per n; worker
// count comes from --jobs (default: hardware concurrency, capped at 8).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "extremal/extremal.hpp"
#include "grids.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool ok, const std::string& what, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << criterion << "] " << what << "  ("
              << static_cast<long>(seconds * 1000) << " ms)" << std::endl;
    if (!ok) ++failures;
}

bool naive_free_matches(const Graph& g) {
    return mask_to_vertices(free_vertices(g)) == oracles::naive_free_vertices(g);
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > 8) jobs = 8;
    for (int i = 1; i < argc; ++i)
        if (i + 1 < argc && std::strcmp(argv[i], "--jobs") == 0) jobs = std::max(1, std::atoi(argv[i + 1]));

    std::cout << "acceptance suite, jobs=" << jobs << std::endl;

    // shared exhaustive pass for n = 3..7
    std::map<int, VerificationSummary> summaries;
    for (int n = 3; n <= 7; ++n) {
        Timer t;
        summaries[n] = verify_classification(n, jobs);
        std::cout << "  scanned n=" << n << ": " << summaries[n].connected << " connected graphs in "
                  << static_cast<long>(t.seconds() * 1000) << " ms" << std::endl;
    }

    {  // 1: equality <=> membership, zero mismatches
        Timer t;
        bool ok = true;
        for (int n = 3; n <= 7; ++n) ok = ok && summaries[n].mismatches.empty();
        report(1, ok, "classification matches the extremal equality on all connected non-complete graphs, n=3..7",
               t.seconds());
    }

    {  // 2: no extremal graph with diameter >= 3 and connectivity >= 2
        Timer t;
        bool ok = true;
        for (int n = 3; n <= 7; ++n) {
            ok = ok && summaries[n].lemma_violations.empty();
            ok = ok && summaries[n].min_gap.value() >= 0;
        }
        report(2, ok, "no extremal graph has diameter >= 3 and connectivity >= 2 (and gap >= 0), n=3..7",
               t.seconds());
    }

    {  // 3: realized tuples equal predicted tuples
        Timer t;
        bool ok = true;
        for (int n = 3; n <= 7; ++n) ok = ok && verify_sequences(summaries[n]).agree;
        report(3, ok, "realized extremal invariant tuples equal the predicted set, n=3..7", t.seconds());
    }

    {  // 4: extremal graphs are chordal; builder outputs on the grid are chordal
        Timer t;
        bool ok = true;
        for (int n = 3; n <= 7; ++n) ok = ok && summaries[n].chordality_violations.empty();
        for (const auto& spec : grids::gd_grid()) ok = ok && chordality(build_gd(spec)).is_chordal;
        for (const auto& spec : grids::fq_grid()) ok = ok && chordality(build_fq(spec)).is_chordal;
        report(4, ok, "every extremal graph and every grid family member is chordal", t.seconds());
    }

    {  // 5: constructor contracts on the grid
        Timer t;
        bool ok = true;
        for (auto [d, f] : grids::gamma_grid()) {
            const auto rep = invariant_report(build_gamma(d, f));
            ok = ok && rep.kappa == 1 && rep.free_count == f && rep.diameter == d && rep.gap == 0;
        }
        for (const auto& p : grids::omega_grid()) {
            const auto rep = invariant_report(build_omega(p.q, p.s, p.t));
            ok = ok && rep.kappa == p.q && rep.free_count == p.s + p.t && rep.diameter == 2 && rep.gap == 0;
        }
        for (const auto& spec : grids::gd_grid()) {
            const auto rep = invariant_report(build_gd(spec));
            ok = ok && rep.diameter == spec.d && rep.kappa == 1 &&
                 rep.free_count == rep.n - (spec.d - 1) && rep.gap == 0;
        }
        for (const auto& spec : grids::fq_grid()) {
            const auto rep = invariant_report(build_fq(spec));
            ok = ok && rep.diameter == 2 && rep.kappa == spec.q && rep.free_count == rep.n - spec.q &&
                 rep.gap == 0;
        }
        report(5, ok, "family builders reproduce their claimed invariants on the parameter grid", t.seconds());
    }

    {  // 6: max-flow kappa vs brute-force separator search; free vertices vs naive check
        Timer t;
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            ConnectedGraphEnumerator en(n);
            while (auto g = en.next()) {
                if (!is_complete(*g)) ok = ok && kappa(*g) == kappa_bruteforce(*g);
                ok = ok && naive_free_matches(*g);
            }
        }
        report(6, ok, "kappa equals brute-force separator search and free vertices match the naive check, n<=6",
               t.seconds());
    }

    {  // 7: classification round-trips builder parameters; graph6 round-trip
        Timer t;
        bool ok = true;
        for (const auto& spec : grids::gd_grid()) {
            const auto cls = classify(build_gd(spec));
            const auto* gd = std::get_if<GdMember>(&cls);
            ok = ok && gd != nullptr && gd->d == spec.d;
        }
        for (const auto& spec : grids::fq_grid()) {
            const auto cls = classify(build_fq(spec));
            const auto* fq = std::get_if<FqMember>(&cls);
            ok = ok && fq != nullptr && fq->q == spec.q;
        }
        ok = ok && encode_graph6(complete_graph(4)) == "C~" && encode_graph6(Graph(4)) == "C?";
        for (int n = 2; n <= 7 && ok; ++n) {
            ConnectedGraphEnumerator en(n);
            while (auto g = en.next()) {
                if (decode_graph6(encode_graph6(*g)) != *g) {
                    ok = false;
                    break;
                }
            }
        }
        report(7, ok, "classification round-trips builder parameters; graph6 round-trips all enumerated graphs",
               t.seconds());
    }

    {  // 8: predicted depth formulas
        Timer t;
        bool ok = true;
        for (const auto& spec : grids::gd_grid()) {
            const Graph h = build_gd(spec);
            ok = ok && predicted_depth(classify(h), h.vertex_count()) == h.vertex_count() + 1;
        }
        for (const auto& spec : grids::fq_grid()) {
            const Graph g = build_fq(spec);
            ok = ok && predicted_depth(classify(g), g.vertex_count()) == g.vertex_count() + 2 - spec.q;
        }
        const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        ok = ok && !predicted_depth(classify(c5), 5).has_value();
        report(8, ok, "predicted depth is n+1 for gd members and n+2-q for fq members, absent otherwise",
               t.seconds());
    }

    {  // extra: chordality against the induced-cycle oracle at full scale
        Timer t;
        std::atomic<bool> ok{true};
        for (int n = 2; n <= 7 && ok; ++n) {
            const std::uint64_t total = ConnectedGraphEnumerator::mask_count(n);
            const int workers = std::min<std::uint64_t>(jobs, total);
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w)
                threads.emplace_back([&, w] {
                    ConnectedGraphEnumerator en(n, total * w / workers, total * (w + 1) / workers);
                    while (auto g = en.next()) {
                        if (!ok) return;
                        if (chordality(*g).is_chordal != !oracles::naive_has_long_induced_cycle(*g))
                            ok = false;
                    }
                });
            for (auto& th : threads) th.join();
        }
        report(0, ok, "extra: chordality matches the brute-force induced-cycle search, n<=7", t.seconds());
    }

    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return failures;
}
