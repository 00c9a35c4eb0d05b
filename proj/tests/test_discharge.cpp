#include "doctest.h"

#include <cmath>
#include <set>

#include "census.hpp"
#include "collage.hpp"
#include "discharge.hpp"
#include "oracles.hpp"
#include "patterns.hpp"

using namespace trg;

namespace {

// Sampled multi-edge collages passing the discharging precondition.
std::vector<Collage> sample_discharging_corpus(int want, std::uint64_t seed_base) {
    std::vector<Collage> out;
    for (std::uint64_t seed = 0; static_cast<int>(out.size()) < want && seed < 4000; ++seed) {
        Graph g = sample_gnp(70, std::pow(70.0, -0.62), RngSpec{seed_base, seed});
        for (Collage& c : maximal_collages(g)) {
            if (static_cast<int>(out.size()) >= want) break;
            if (all_triangles(c.local).empty()) continue;
            if (contains_k4_f2_f3(c.local)) continue;
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace

TEST_CASE("single triangle weights") {
    Graph tri = Graph::complete(3);
    BlockWeights w = assign_block_weights(tri);
    REQUIRE(w.blocks.size() == 1);
    CHECK_FALSE(w.blocks[0].is_k4_minus);
    CHECK(w.weight[0] == Rat(6)); // 3*5 - 3*3
    auto pos = positive_block(w);
    REQUIRE(pos.has_value());
    CHECK(*pos == 0);
    // Any edge qualifies for removal: no F0_minus copies exist.
    auto removable = removable_edges(tri, w, *pos);
    CHECK(removable.size() == 1);
}

TEST_CASE("precondition rejections") {
    CHECK_THROWS_AS(assign_block_weights(Graph::complete(4)), precondition_error);
    CHECK_THROWS_AS(assign_block_weights(pattern("F2").graph), precondition_error);
    CHECK_THROWS_AS(assign_block_weights(pattern("F3").graph), precondition_error);
    // Triangle-free collage graphs have no blocks to discharge into.
    CHECK_THROWS_AS(assign_block_weights(Graph::from_edges(2, {{0, 1}})), precondition_error);
    // F4 is allowed (it is not one of the excluded shapes).
    CHECK_NOTHROW(assign_block_weights(pattern("F4").graph));
}

TEST_CASE("hanging triangles push the central block weight down") {
    // Triangle X on {0,1,2} with extra triangles hanging on vertices 1 and 2:
    // X receives 5 + 5/2 + 5/2 - 9 = 1 at most.
    Graph two_hang = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 5}, {2, 6}, {5, 6}});
    BlockWeights w2 = assign_block_weights(two_hang);
    int xi = -1;
    for (std::size_t i = 0; i < w2.blocks.size(); ++i) {
        if (w2.blocks[i].vertices == std::vector<int>{0, 1, 2}) xi = static_cast<int>(i);
    }
    REQUIRE(xi >= 0);
    CHECK(w2.weight[xi] <= Rat(1));

    // Hanging triangles on all three vertices: at most -3/2.
    Graph three_hang = Graph::from_edges(
        9, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 5}, {2, 6}, {5, 6},
            {0, 7}, {0, 8}, {7, 8}});
    BlockWeights w3 = assign_block_weights(three_hang);
    xi = -1;
    for (std::size_t i = 0; i < w3.blocks.size(); ++i) {
        if (w3.blocks[i].vertices == std::vector<int>{0, 1, 2}) xi = static_cast<int>(i);
    }
    REQUIRE(xi >= 0);
    CHECK(w3.weight[xi] <= Rat(-3, 2));
}

TEST_CASE("weight conservation and stage-local checks on sampled collages") {
    auto corpus = sample_discharging_corpus(120, 800);
    CHECK(corpus.size() == 120);
    for (const Collage& c : corpus) {
        BlockWeights w = assign_block_weights(c.local);
        Rat expected = Rat(5 * c.vertex_count() - 3 * c.edge_count());
        CHECK(w.total() == expected);
        // After the final stage every vertex and edge is fully discharged.
        const StageSnapshot& last = w.stages.back();
        for (const Rat& vw : last.vertex_weight) CHECK(vw == Rat(0));
        for (const Rat& ew : last.edge_weight) CHECK(ew == Rat(0));
        // After stage 4, in-block edges are discharged.
        const StageSnapshot& s4 = w.stages[3];
        CHECK(s4.stage == 4);
        std::set<int> in_block;
        for (const Block& b : w.blocks) in_block.insert(b.edge_indices.begin(),
                                                        b.edge_indices.end());
        for (int e = 0; e < c.local.m(); ++e) {
            if (in_block.count(e)) CHECK(s4.edge_weight[e] == Rat(0));
        }
        // Positive block exists whenever the collage itself is below 5/3
        // density (the block total equals 5v - 3e > 0).
        if (c.density() < Rat(5, 3)) {
            CHECK(positive_block(w).has_value());
        }
    }
}

TEST_CASE("weight monotonicity under sub-collages with identical blocks") {
    // C' = union of all triangles of C keeps the block set; block weights on
    // C are at most those on C'.
    auto corpus = sample_discharging_corpus(60, 801);
    int compared = 0;
    for (const Collage& c : corpus) {
        std::vector<Edge> tri_edges;
        for (const auto& t : all_triangles(c.local)) {
            tri_edges.emplace_back(t[0], t[1]);
            tri_edges.emplace_back(t[0], t[2]);
            tri_edges.emplace_back(t[1], t[2]);
        }
        std::sort(tri_edges.begin(), tri_edges.end());
        tri_edges.erase(std::unique(tri_edges.begin(), tri_edges.end()), tri_edges.end());
        if (static_cast<int>(tri_edges.size()) == c.local.m()) continue; // identical
        Graph cp = Graph::from_edges(c.local.n(), tri_edges);
        BlockWeights full = assign_block_weights(c.local);
        BlockWeights sub = assign_block_weights(cp);
        if (full.blocks.size() != sub.blocks.size()) continue; // block sets differ
        bool same = true;
        for (std::size_t i = 0; i < full.blocks.size(); ++i) {
            if (full.blocks[i].vertices != sub.blocks[i].vertices) same = false;
        }
        if (!same) continue;
        for (std::size_t i = 0; i < full.blocks.size(); ++i) {
            CHECK(!(sub.weight[i] < full.weight[i]));
        }
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("removable edges on an isolated K4_minus") {
    Graph k4m = pattern("K4_minus").graph;
    BlockWeights w = assign_block_weights(k4m);
    REQUIRE(w.blocks.size() == 1);
    CHECK(w.blocks[0].is_k4_minus);
    CHECK(w.weight[0] == Rat(5)); // 4*5 - 3*5
    auto removable = removable_edges(k4m, w, 0);
    REQUIRE(removable.size() == 2);
    // The pair shares the off-vertex and spans to both shared-edge endpoints.
    const Block& b = w.blocks[0];
    int xi = removable[0].u == b.y || removable[0].u == b.z ? removable[0].v : removable[0].u;
    std::set<Edge> got(removable.begin(), removable.end());
    CHECK(got.count(Edge(xi, b.y)));
    CHECK(got.count(Edge(xi, b.z)));
}

TEST_CASE("very good colouring on fixed instances") {
    // A single triangle: one edge one colour, two the other, no mono triangle.
    Collage tri = make_collage(10, {{0, 1}, {0, 2}, {1, 2}});
    TwoColouring tcol = very_good_colouring(tri);
    CHECK(is_t_good(tcol, 1).good);

    // F0_minus as a collage.
    Collage f0m = make_collage(10, pattern("F0_minus").graph.edges());
    TwoColouring fcol = very_good_colouring(f0m);
    GoodnessReport rep = is_t_good(fcol, 1);
    CHECK(rep.good);
    CHECK(rep.crrbb == 0);

    // K4_minus and F4 are colourable too.
    CHECK(is_t_good(very_good_colouring(make_collage(10, pattern("K4_minus").graph.edges())), 1)
              .good);
    CHECK(is_t_good(very_good_colouring(make_collage(10, pattern("F4").graph.edges())), 1).good);
}

TEST_CASE("very good colouring on sampled discharging corpus") {
    auto corpus = sample_discharging_corpus(150, 802);
    int coloured = 0;
    for (const Collage& c : corpus) {
        if (!dense_pair_violations(c.local).empty()) continue;
        if (!(densest_subgraph_density(c.local) < Rat(5, 3))) continue;
        TwoColouring col = very_good_colouring(c);
        GoodnessReport rep = is_t_good(col, 1);
        CHECK(rep.good);
        ++coloured;
    }
    CHECK(coloured > 50);
}

namespace {

// Colour every qualifying collage of g and verify; returns collages coloured.
int colour_all_qualifying(const Graph& g) {
    int coloured = 0;
    for (const Collage& c : maximal_collages(g)) {
        if (all_triangles(c.local).empty()) continue;
        if (!dense_pair_violations(c.local).empty()) continue;
        if (!(densest_subgraph_density(c.local) < Rat(5, 3))) continue;
        TwoColouring col = very_good_colouring(c);
        REQUIRE(is_t_good(col, 1).good);
        ++coloured;
    }
    return coloured;
}

} // namespace

TEST_CASE("very good colouring is exhaustive on six vertices") {
    // Every edge subset of K6: every collage meeting the density and
    // dense-subset conditions must come out very good, with no
    // falsification events.
    std::vector<Edge> all_edges = Graph::complete(6).edges();
    int coloured = 0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        std::vector<Edge> edges;
        for (int e = 0; e < 15; ++e) {
            if (mask >> e & 1) edges.push_back(all_edges[e]);
        }
        if (edges.size() < 3) continue;
        coloured += colour_all_qualifying(Graph::from_edges(6, edges));
    }
    CHECK(coloured > 5000);
}

TEST_CASE("very good colouring fuzz on eight vertices") {
    int coloured = 0;
    for (int seed = 0; seed < 3000; ++seed) {
        Graph g = sample_gnp(8, 0.45, RngSpec{803, static_cast<std::uint64_t>(seed)});
        coloured += colour_all_qualifying(g);
    }
    CHECK(coloured > 500);
}
