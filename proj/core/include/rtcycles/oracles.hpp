#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtcycles/graph.hpp"

namespace rtc {

struct OracleViolation {
    std::string graph6;
    std::string detail;
};

// Pass/fail record of one theorem suite. These are proven theorems run over
// full labeled graph spaces, so violations mean a cycle-engine bug, not new
// mathematics; that is the point of the suite.
struct OracleReport {
    std::string theorem;
    uint64_t instances_checked = 0;
    std::vector<OracleViolation> violations;
    bool exhaustive = false;
    std::vector<std::pair<std::string, double>> stats;

    bool pass() const { return violations.empty(); }
};

// delta(G) > n/2 implies C_k for all k in [3, n]; every labeled graph with
// 3 <= n <= n_max (n_max <= 7).
OracleReport check_bondy(int n_max);

// e(G) > n^2/4 implies C_k for all k in [3, ceil(n/2)]; flags orders where
// the range is empty as vacuous.
OracleReport check_bollobas(int n_max);

// e(G) > k|G|/2 implies a path and a cycle of length (in edges) at least
// k+1, i.e. a path on >= k+2 vertices and circumference >= k+1; k in
// [2, k_max].
OracleReport check_erdos_gallai(int n_max, int k_max);

// Samples nonbipartite 2-connected graphs with delta(G) > 2n/(2k+1) and
// tabulates how often C_{2k-1} appears. The underlying statement is
// asymptotic, so misses are recorded as observations in stats, never as
// violations; exhaustive is always false.
OracleReport sample_haggkvist(int k, int n, int samples, uint64_t seed);

}  // namespace rtc
