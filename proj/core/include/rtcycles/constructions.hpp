#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rtcycles/coloring.hpp"

namespace rtc {

// A property the construction promises, checkable by the graph/cycle
// predicates. Tests iterate these mechanically.
struct Claim {
    std::string name;
    std::function<bool(const TwoColoring&)> check;
};

struct ColoredInstance {
    TwoColoring coloring;
    std::string label;
    std::vector<Claim> claims;
};

bool validate_claims(const ColoredInstance& inst);
std::vector<std::string> failing_claims(const ColoredInstance& inst);

// Blue complete bipartite K_{2p,2p} with a red K_{p,p} inside each side:
// n = 4p, every host degree exactly 3p, both classes bipartite.
// Side one is {0..2p-1}, side two {2p..4p-1}; the red K_{p,p} in a side pairs
// its first p vertices with its last p.
ColoredInstance tight_example(int p);

// K_5 split into a red 5-cycle 0-1-2-3-4-0 and the complementary blue
// 5-cycle 0-2-4-1-3-0, then blown up by t: n = 5t, every host degree exactly
// 4t, neither class contains a triangle.
ColoredInstance pentagon_blowup(int t);

// Complete 4-partite host on classes U_1..U_4 of size p (U_i occupies
// [(i-1)p, ip)). U_1-U_2 and U_3-U_4 bundles are blue; U_1-U_3 and U_2-U_4
// red; the p^2 U_1-U_4 edges then the p^2 U_2-U_3 edges, each in row-major
// order, take colors from free_mask (bit set = red). Both classes are
// bipartite for every mask.
ColoredInstance four_class_family(int p, const std::vector<bool>& free_mask);

}  // namespace rtc
