#ifndef TRG_PATTERNS_HPP
#define TRG_PATTERNS_HPP

#include <map>
#include <string>

#include "graph.hpp"

namespace trg {

// Largest pattern the census accepts.  K2_10_plus needs 13 vertices, one more
// than every other library pattern.
inline constexpr int kMaxPatternVertices = 13;

struct Pattern {
    std::string name;
    Graph graph;
};

// The fixed census targets: K3, K4, K4_minus, C4, C5, K12 (= K_{1,2}),
// F0, F0_minus, F1, F1_minus, F2, F3, F4, F5, F5_prime, F6, F6_prime,
// K2_10 and K2_10_plus.
const std::map<std::string, Pattern>& pattern_library();

const Pattern& pattern(const std::string& name);

// Canonical role vertices inside library patterns, used by structural code:
//   F0_minus: vertices 0..5 with triangles {0,1,5} and {0,2,4} and the unique
//   4-cycle 0-1-3-2.
struct F0MinusShape {
    // Pattern-vertex indices.
    static constexpr int u1 = 0, u2 = 1, u3 = 2, w1 = 3, w2 = 4, w3 = 5;
};

} // namespace trg

#endif
