// Acceptance suite: every criterion prints one [PASS]/[FAIL] line with its
// wall time; the exit code is the number of failures. Run a single criterion
// with `acceptance <id>`, everything with no arguments.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rtcycles/constructions.hpp"
#include "rtcycles/cycles.hpp"
#include "rtcycles/graph_io.hpp"
#include "rtcycles/oracles.hpp"
#include "rtcycles/search.hpp"

using namespace rtc;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// 1. Tightness construction: p in {1..4}, host min degree exactly 3p = 3n/4,
// both classes bipartite by certificate; < 1 s total.
Check criterion1() {
    Check c;
    for (int p = 1; p <= 4; ++p) {
        auto inst = tight_example(p);
        auto stats = degree_stats(inst.coloring.host);
        c.require(stats.min_degree == 3 * p && stats.max_degree == 3 * p,
                  "p=" + std::to_string(p) + ": host degree != 3p");
        auto red = is_bipartite(inst.coloring.red);
        auto blue = is_bipartite(inst.coloring.blue);
        c.require(red.bipartite && blue.bipartite,
                  "p=" + std::to_string(p) + ": class not bipartite");
        for (const BipartiteCheck* cert : {&red, &blue})
            for (auto [u, v] :
                 edge_list(cert == &red ? inst.coloring.red : inst.coloring.blue))
                c.require(((cert->side[0] >> u) & 1) != ((cert->side[0] >> v) & 1),
                          "certificate has an internal edge");
        c.require(validate_claims(inst), "p=" + std::to_string(p) + ": claim failed");
    }
    c.detail = "p in {1,2,3,4}: delta = 3n/4 exactly, both classes bipartite with certificates";
    return c;
}

// 2. Pentagon blow-up: t in {1,2,3}, host min degree exactly 4t = 4n/5, no
// triangle in either class; < 5 s.
Check criterion2() {
    Check c;
    for (int t = 1; t <= 3; ++t) {
        auto inst = pentagon_blowup(t);
        auto stats = degree_stats(inst.coloring.host);
        c.require(stats.min_degree == 4 * t && stats.max_degree == 4 * t,
                  "t=" + std::to_string(t) + ": host degree != 4t");
        c.require(!has_cycle_of_length(inst.coloring.red, 3),
                  "t=" + std::to_string(t) + ": red triangle");
        c.require(!has_cycle_of_length(inst.coloring.blue, 3),
                  "t=" + std::to_string(t) + ": blue triangle");
    }
    c.detail = "t in {1,2,3}: delta = 4n/5 exactly, 3 not in either spectrum";
    return c;
}

// 3. Four-class family: all 2^{2p^2} masks at p in {1,2} produce valid
// partitions with both classes bipartite; p=1's four members pairwise
// distinct; < 10 s.
Check criterion3() {
    Check c;
    std::vector<TwoColoring> p1_members;
    for (int p = 1; p <= 2; ++p) {
        const int bits = 2 * p * p;
        for (uint32_t mask = 0; mask < (uint32_t{1} << bits); ++mask) {
            std::vector<bool> mv(static_cast<size_t>(bits));
            for (int b = 0; b < bits; ++b) mv[static_cast<size_t>(b)] = (mask >> b) & 1;
            auto inst = four_class_family(p, mv);
            inst.coloring.validate();
            c.require(is_bipartite(inst.coloring.red).bipartite &&
                          is_bipartite(inst.coloring.blue).bipartite,
                      "p=" + std::to_string(p) + " mask=" + std::to_string(mask) +
                          ": class not bipartite");
            if (p == 1) p1_members.push_back(inst.coloring);
        }
    }
    c.require(p1_members.size() == 4, "p=1 family size != 4");
    for (size_t i = 0; i < p1_members.size(); ++i)
        for (size_t j = i + 1; j < p1_members.size(); ++j)
            c.require(!(p1_members[i] == p1_members[j]), "p=1 members not pairwise distinct");
    c.detail = "4 + 256 masks all valid partitions, both classes bipartite, p=1 members distinct";
    return c;
}

// 4. Conjecture 1 at n = 7: VERIFIED over all 2^21 colorings of K_7 on range
// [4,4]; pruned and unpruned agree; unpruned < 60 s.
Check criterion4() {
    Check c;
    Conjecture1Options opt;
    opt.n = 7;
    SearchReport pruned = verify_conjecture1(opt);
    c.require(pruned.verdict == Verdict::Verified, "pruned run not VERIFIED");
    c.require(pruned.range == KRange{4, 4}, "default range is not [4,4]");
    c.require(pruned.colorings_covered == uint64_t{1} << 21, "pruned covered != 2^21");
    opt.pruned = false;
    SearchReport unpruned = verify_conjecture1(opt);
    c.require(unpruned.verdict == Verdict::Verified, "unpruned run not VERIFIED");
    c.require(unpruned.colorings_examined == uint64_t{1} << 21, "unpruned examined != 2^21");
    c.require(unpruned.colorings_covered == pruned.colorings_covered,
              "pruned and unpruned disagree on coverage");
    c.detail = "VERIFIED over 2^21 colorings of K_7, pruned and unpruned agree";
    return c;
}

// 5. Conjecture 1 at n = 8: VERIFIED over all hosts (K_8 minus partial
// matchings, boundary-inclusive) with pruning and parallelism; parallel
// verdict and counts identical to serial; well under the 30-minute target.
Check criterion5() {
    Check c;
    Conjecture1Options opt;
    opt.n = 8;
    SearchReport strict = verify_conjecture1(opt);
    c.require(strict.verdict == Verdict::Verified, "strict n=8 run not VERIFIED");
    c.require(strict.hosts_examined == 1, "strict host set is {K_8}");

    opt.include_boundary = true;
    SearchReport serial = verify_conjecture1(opt);
    c.require(serial.verdict == Verdict::Verified, "boundary n=8 run not VERIFIED");
    c.require(serial.hosts_examined == 764, "host count != 764 (K_8 minus matchings)");

    opt.jobs = 2;
    SearchReport parallel = verify_conjecture1(opt);
    c.require(parallel.verdict == serial.verdict, "parallel verdict differs");
    c.require(parallel.colorings_examined == serial.colorings_examined &&
                  parallel.colorings_covered == serial.colorings_covered &&
                  parallel.hosts_examined == serial.hosts_examined,
              "parallel counts differ from serial");
    c.detail = "VERIFIED over all 764 hosts, parallel counts identical to serial";
    return c;
}

// 6. Avoidance search: K_6 with C_4 forbidden both sides is proven absent by
// exhausting 2^15 colorings (< 1 s); K_5 with C_3 forbidden finds a valid
// coloring and the double-pentagon coloring validates.
Check criterion6() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    AvoidResult k6 = search_coloring_avoiding(complete_graph(6), {4}, {4});
    double k6_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(k6.outcome == AvoidOutcome::Absent, "K_6 C_4/C_4 not proven absent");
    c.require(k6.colorings_covered == uint64_t{1} << 15, "K_6 coverage != 2^15");
    c.require(k6_secs < 1.0, "K_6 absence proof took >= 1 s");

    AvoidResult k5 = search_coloring_avoiding(complete_graph(5), {3}, {3});
    c.require(k5.outcome == AvoidOutcome::Found, "K_5 triangle-free coloring not found");
    if (k5.coloring) {
        c.require(!has_cycle_of_length(k5.coloring->red, 3) &&
                      !has_cycle_of_length(k5.coloring->blue, 3),
                  "found K_5 coloring has a mono triangle");
    }
    auto pent = pentagon_blowup(1);
    c.require(mono_missing(pent.coloring, {3, 3}) == std::set<int>{3},
              "double-pentagon coloring does not validate");
    c.detail = "K_6 absence by exhausting 2^15; K_5 witness found; double pentagon validates";
    return c;
}

// 7. Spectrum oracle equivalence: exact spectrum equals the naive
// sequence-enumeration spectrum on every graph with n <= 6 and on 10^4
// random graphs at n in {7, 8}; zero disagreements.
Check criterion7() {
    Check c;
    uint64_t disagreements = 0;
    for (int n = 1; n <= 6 && c.ok; ++n) {
        std::vector<std::pair<int, int>> edges;
        if (n >= 2) edges = edge_list(complete_graph(n));
        Graph g(n);
        uint64_t prev = 0;
        const uint64_t total = uint64_t{1} << edges.size();
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t flip = code ^ prev;
            while (flip) {
                int idx = std::countr_zero(flip);
                flip &= flip - 1;
                auto [u, v] = edges[static_cast<size_t>(idx)];
                if ((code >> idx) & 1)
                    g.add_edge(u, v);
                else
                    g.remove_edge(u, v);
            }
            prev = code;
            auto exact = spectrum(g).lengths();
            std::set<int> naive = test::naive_spectrum(g);
            if (std::set<int>(exact.begin(), exact.end()) != naive) ++disagreements;
        }
    }
    Rng rng(20260808);
    for (int i = 0; i < 10000; ++i) {
        int n = 7 + static_cast<int>(rng.below(2));
        Graph g = test::random_graph(n, rng);
        auto exact = spectrum(g).lengths();
        std::set<int> naive = test::naive_spectrum(g);
        if (std::set<int>(exact.begin(), exact.end()) != naive) ++disagreements;
    }
    c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    c.detail = "exhaustive n <= 6 plus 10^4 random graphs at n in {7,8}, zero disagreements";
    return c;
}

// 8. Classical-theorem suites: bondy(7), bollobas(7), erdos-gallai(6,4) all
// pass with zero violations, exhaustive; < 10 min combined.
Check criterion8() {
    Check c;
    OracleReport bondy = check_bondy(7);
    c.require(bondy.pass() && bondy.exhaustive, "bondy(7) failed");
    OracleReport bollobas = check_bollobas(7);
    c.require(bollobas.pass() && bollobas.exhaustive, "bollobas(7) failed");
    OracleReport eg = check_erdos_gallai(6, 4);
    c.require(eg.pass() && eg.exhaustive, "erdos-gallai(6,4) failed");
    c.detail = "bondy(7), bollobas(7), erdos-gallai(6,4): zero violations, exhaustive";
    return c;
}

// 9. Counting: 6 on K_3 and 30 on the 5-cycle host; matches the naive 2^e
// sweep on 50 random hosts with e <= 12.
Check criterion9() {
    Check c;
    c.require(count_odd_free_colorings(complete_graph(3)) == 6, "K_3 count != 6");
    c.require(count_odd_free_colorings(cycle_graph(5)) == 30, "C_5 count != 30");
    Rng rng(808);
    int checked = 0;
    while (checked < 50) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph host = test::random_graph(n, rng);
        auto edges = edge_list(host);
        if (edges.size() > 12) continue;
        uint64_t naive = 0;
        for (uint64_t code = 0; code < (uint64_t{1} << edges.size()); ++code) {
            Graph red(n), blue(n);
            for (size_t e = 0; e < edges.size(); ++e)
                ((code >> e) & 1 ? red : blue).add_edge(edges[e].first, edges[e].second);
            if (test::naive_two_colorable(red) && test::naive_two_colorable(blue)) ++naive;
        }
        if (count_odd_free_colorings(host) != naive) {
            c.require(false, "sweep mismatch on a random host");
            break;
        }
        ++checked;
    }
    c.detail = "K_3 -> 6, C_5 -> 30, naive 2^e sweep matched on 50 random hosts";
    return c;
}

// 10. Color-coding soundness: over 300 random graphs (n <= 12), never true
// where the exact engine says false, and every true carries a validating
// witness cycle.
Check criterion10() {
    Check c;
    Rng rng(90210);
    int trues = 0;
    for (int i = 0; i < 300; ++i) {
        int n = 4 + static_cast<int>(rng.below(9));
        Graph g = test::random_graph(n, rng);
        int k = 3 + static_cast<int>(rng.below(static_cast<uint32_t>(n - 2)));
        auto hit = color_coding_find_cycle(g, k, 20, rng.next());
        if (!hit.found) continue;
        ++trues;
        if (!has_cycle_of_length(g, k)) {
            c.require(false, "color coding returned true where exact search says false");
            break;
        }
        bool witness_ok = hit.cycle.size() == static_cast<size_t>(k);
        uint64_t seen = 0;
        for (int v : hit.cycle) {
            if ((seen >> v) & 1) witness_ok = false;
            seen |= uint64_t{1} << v;
        }
        for (size_t j = 0; j < hit.cycle.size() && witness_ok; ++j)
            witness_ok = g.has_edge(hit.cycle[j], hit.cycle[(j + 1) % hit.cycle.size()]);
        if (!witness_ok) {
            c.require(false, "true without a validating witness");
            break;
        }
    }
    c.require(trues > 0, "no positive trials exercised");
    c.detail = std::to_string(trues) + " positives over 300 graphs, all confirmed with witnesses";
    return c;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "tightness construction", 1.0, criterion1},
        {2, "pentagon blow-up", 5.0, criterion2},
        {3, "four-class family", 10.0, criterion3},
        {4, "conjecture 1 exhaustive at n=7", 60.0, criterion4},
        {5, "conjecture 1 exhaustive at n=8", 1800.0, criterion5},
        {6, "avoidance search", 30.0, criterion6},
        {7, "spectrum oracle equivalence", 300.0, criterion7},
        {8, "classical-theorem suites", 600.0, criterion8},
        {9, "odd-free coloring counts", 60.0, criterion9},
        {10, "color-coding soundness", 60.0, criterion10},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& crit : criteria) {
        if (only != 0 && crit.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Check result;
        try {
            result = crit.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= crit.budget_seconds) {
            result.ok = false;
            result.detail = "over time budget of " + std::to_string(crit.budget_seconds) + " s";
        }
        std::printf("[%s] criterion %2d: %s — %s [%.2fs]\n", result.ok ? "PASS" : "FAIL",
                    crit.id, crit.title, result.detail.c_str(), secs);
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    return failures;
}
