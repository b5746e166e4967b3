#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rtcycles/coloring.hpp"
#include "rtcycles/cycles.hpp"

namespace rtc {

// Exact rational threshold, e.g. 3/4 in "delta(G) > 3n/4".
struct Fraction {
    long long num = 0;
    long long den = 1;
};

// Inclusive cycle-length interval; empty when hi < lo.
struct KRange {
    int lo = 4;
    int hi = 3;

    bool empty() const { return hi < lo; }
    bool contains(int k) const { return k >= lo && k <= hi; }
    void validate(int n) const;

    // [4, ceil(n/2)]
    static KRange conjecture1_default(int n) { return {4, (n + 1) / 2}; }

    bool operator==(const KRange&) const = default;
};

enum class Verdict { Verified, Counterexample, ExhaustedBudget };

std::string verdict_name(Verdict v);

struct Witness {
    TwoColoring coloring;
    std::vector<int> missing;       // per-k mode: ks with no monochromatic C_k
    std::vector<int> missing_red;   // uniform mode: ks absent from red
    std::vector<int> missing_blue;  // uniform mode: ks absent from blue
};

struct SearchReport {
    Verdict verdict = Verdict::Verified;
    std::optional<Witness> witness;
    uint64_t hosts_examined = 0;
    uint64_t colorings_examined = 0;  // leaves and subtree cuts actually decided
    uint64_t colorings_covered = 0;   // colorings those decisions account for
    double elapsed_seconds = 0;
    bool vacuous = false;  // empty range, or no hosts / no instances
    bool pruned = true;
    bool uniform_color = false;
    bool include_boundary = false;
    int n = 0;
    KRange range;
    int jobs = 1;
    uint64_t budget_cap = 0;
    // Sampling runs (conjecture 2).
    bool sampled = false;
    bool vacuous_threshold = false;
    bool boundary_hosts = false;  // hosts sit at delta = c*n exactly
    int threshold = 0;
    uint64_t instances_checked = 0;
    uint64_t violations = 0;
    uint64_t unknown_instances = 0;
    // Unfinished work when verdict is ExhaustedBudget: (host index, prefix
    // bitstring) pairs in search order.
    std::vector<std::pair<size_t, std::string>> frontier;
};

// Every k in `range` such that neither class contains C_k. Budget exhaustion
// while deciding some k surfaces as BudgetExceeded with at_length = k.
std::set<int> mono_missing(const TwoColoring& c, KRange range, Budget& budget);
std::set<int> mono_missing(const TwoColoring& c, KRange range);

// Streams all labeled graphs on n vertices whose minimum degree beats
// threshold*n (strictly when strict, else non-strictly), by enumerating the
// complement side under its max-degree budget. Sink returns false to stop.
void hosts_with_min_degree(int n, Fraction threshold, bool strict,
                           const std::function<bool(const Graph&)>& sink);
std::vector<Graph> collect_hosts(int n, Fraction threshold, bool strict = true);

// Brute-force isomorphism reduction, n <= 8 only; keeps first representative
// of each class in input order.
std::vector<Graph> dedup_isomorphic(const std::vector<Graph>& graphs);

struct Conjecture1Options {
    int n = 7;
    std::optional<KRange> range_override;
    bool uniform_color = false;   // single color must cover the whole range
    bool pruned = true;
    bool include_boundary = false;  // hosts with delta >= threshold*n instead of >
    int jobs = 1;
    uint64_t budget = 1'000'000'000ULL;  // node expansions, per search branch
};

// (host index, branch prefix as 0/1 string, red first) — resume granule.
struct BranchTask {
    size_t host_index;
    std::string prefix;
};

SearchReport verify_conjecture1(const Conjecture1Options& opt);

// Same engine over an explicit host list; `resume` restricts the run to the
// given branches.
SearchReport verify_over_hosts(const std::vector<Graph>& hosts, KRange range,
                               const Conjecture1Options& opt,
                               const std::vector<BranchTask>* resume = nullptr);

// All counterexample colorings of one host (pruning only ever cuts subtrees
// whose extensions all satisfy the conclusion, so pruned and unpruned
// enumerations agree).
std::vector<Witness> enumerate_counterexamples(const Graph& host, KRange range, bool uniform_color,
                                               bool pruned, size_t limit);

enum class AvoidOutcome { Found, Absent, ExhaustedBudget };

std::string avoid_outcome_name(AvoidOutcome o);

struct AvoidResult {
    AvoidOutcome outcome = AvoidOutcome::Absent;
    std::optional<TwoColoring> coloring;
    uint64_t nodes = 0;
    uint64_t colorings_covered = 0;
    bool used_color_swap_symmetry = false;
};

// First 2-coloring in which red avoids C_k for k in forbidden_red and blue
// avoids C_k for k in forbidden_blue, or a proof of absence. When the two
// forbidden sets are equal, the red/blue swap symmetry halves the search; the
// covered count still accounts for the full space.
AvoidResult search_coloring_avoiding(const Graph& g, const std::set<int>& forbidden_red,
                                     const std::set<int>& forbidden_blue,
                                     uint64_t budget_cap = 1'000'000'000ULL);

// All such colorings (no symmetry reduction), up to `limit`.
std::vector<TwoColoring> enumerate_colorings_avoiding(const Graph& g,
                                                      const std::set<int>& forbidden_red,
                                                      const std::set<int>& forbidden_blue,
                                                      size_t limit);

// Number of 2-colorings of E(g) in which neither class contains an odd cycle
// (both classes stay bipartite; parity union-find on both sides).
uint64_t count_odd_free_colorings(const Graph& g);

struct Conjecture2Options {
    Fraction c;
    int n = 10;
    int graph_samples = 50;
    int coloring_samples = 16;
    uint64_t seed = 0;
    uint64_t budget = 1'000'000'000ULL;
    // Admit hosts with delta exactly c*n when delta > c*n is unachievable at
    // this order; such runs are flagged, since those hosts sit outside the
    // strict hypothesis.
    bool include_boundary = false;
};

// Sampling verifier: hosts with delta > c*n (random supergraphs of a
// Hamilton cycle, plus the tight and pentagon constructions when eligible),
// random and adversarial colorings; each instance must show a monochromatic
// cycle of length >= ceil(c*n). Never exhaustive; the report says so.
SearchReport verify_conjecture2(const Conjecture2Options& opt);

// Observational quantities behind the structural claims: bipartiteness, edge
// counts, min degrees and 2-connectivity of both classes.
struct ClaimDiagnostics {
    bool red_bipartite = false;
    bool blue_bipartite = false;
    int e_red = 0;
    int e_blue = 0;
    int delta_red = 0;
    int delta_blue = 0;
    bool red_2conn = false;
    bool blue_2conn = false;
};

ClaimDiagnostics diagnostics(const TwoColoring& c);

}  // namespace rtc
