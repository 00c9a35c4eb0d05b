#include "patterns.hpp"

namespace trg {

namespace {

Pattern make(const std::string& name, int n, std::vector<Edge> edges) {
    return Pattern{name, Graph::from_edges(n, std::move(edges))};
}

Pattern make_cycle(const std::string& name, int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return make(name, k, std::move(edges));
}

// Complete bipartite K_{2,10} on {0,1} x {2..11}; the plus variant hangs a
// pendant vertex 12 off the degree-10 vertex 0.
Pattern make_k2_10(bool plus) {
    std::vector<Edge> edges;
    for (int side = 0; side < 2; ++side)
        for (int v = 2; v < 12; ++v) edges.emplace_back(side, v);
    if (plus) {
        edges.emplace_back(0, 12);
        return make("K2_10_plus", 13, std::move(edges));
    }
    return make("K2_10", 12, std::move(edges));
}

std::map<std::string, Pattern> build_library() {
    std::map<std::string, Pattern> lib;
    auto add = [&lib](Pattern p) { lib.emplace(p.name, std::move(p)); };

    add(make("K3", 3, {{0, 1}, {0, 2}, {1, 2}}));
    add(make("K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    add(make("K4_minus", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    add(make_cycle("C4", 4));
    add(make_cycle("C5", 5));
    add(make("K12", 3, {{0, 1}, {0, 2}}));

    // F0: triangle 0,1,2; each outer vertex joined to a pair of triangle
    // vertices (3~{1,2}, 4~{0,2}, 5~{0,1}).  F0_minus drops the triangle edge
    // {1,2}.
    add(make("F0", 6,
             {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}}));
    add(make("F0_minus", 6,
             {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}}));

    // F1: triangle 0,1,2 plus vertex 3 joined to all of it and vertex 4 joined
    // to {1,2}.  F1_minus drops {1,2}.
    add(make("F1", 5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}));
    add(make("F1_minus", 5, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}));

    // F2/F3/F4: K4_minus plus a length-two path joining, respectively, a
    // degree-3 to a degree-2 vertex, the two degree-3 vertices, and the two
    // degree-2 vertices.
    add(make("F2", 5, {{0, 1}, {0, 2}, {1, 2}, {0, 4}, {1, 4}, {0, 3}, {2, 3}}));
    add(make("F3", 5, {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 4}, {1, 3}, {2, 3}}));
    add(make("F4", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {0, 3}, {0, 4}}));

    // The four 8-vertex, 12-edge graphs arising from a K4_minus block, a
    // triangle block and two 4-cycles through them.
    add(make("F5", 8,
             {{0, 3}, {0, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {2, 5}, {3, 6}, {4, 6},
              {6, 7}, {5, 7}}));
    add(make("F5_prime", 8,
             {{0, 3}, {0, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {2, 5}, {3, 6}, {4, 6},
              {6, 7}, {2, 7}}));
    add(make("F6", 8,
             {{0, 1}, {0, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {2, 5}, {3, 6}, {4, 6},
              {6, 7}, {5, 7}}));
    add(make("F6_prime", 8,
             {{0, 1}, {2, 3}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {2, 5}, {3, 6}, {4, 6}, {6, 7},
              {5, 7}, {0, 5}}));

    add(make_k2_10(false));
    add(make_k2_10(true));
    return lib;
}

} // namespace

const std::map<std::string, Pattern>& pattern_library() {
    static const std::map<std::string, Pattern> lib = build_library();
    return lib;
}

const Pattern& pattern(const std::string& name) {
    const auto& lib = pattern_library();
    auto it = lib.find(name);
    if (it == lib.end()) throw invalid_argument_error("unknown pattern: " + name);
    return it->second;
}

} // namespace trg
