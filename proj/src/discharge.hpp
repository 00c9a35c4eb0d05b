#ifndef TRG_DISCHARGE_HPP
#define TRG_DISCHARGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "collage.hpp"
#include "colouring.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace trg {

// A discharging block: a K4_minus copy, or a triangle lying in no K4_minus.
struct Block {
    bool is_k4_minus = false;
    std::vector<int> vertices;     // sorted, 3 or 4
    std::vector<int> edge_indices; // sorted, 3 or 5
    // K4_minus role labels: shared edge y-z lies in both triangles, x1/x2 are
    // the off vertices (y < z, x1 < x2).
    int y = -1, z = -1, x1 = -1, x2 = -1;
};

struct StageSnapshot {
    int stage = 0;
    std::vector<Rat> vertex_weight;
    std::vector<Rat> edge_weight;
    std::vector<Rat> block_weight;
};

// Output of the six-stage weight redistribution.  Blocks are in sigma order:
// all triangles before all K4_minus copies, each class sorted by vertex
// tuple.  After stage 6 the block weights sum to exactly 5 v(C) - 3 e(C).
struct BlockWeights {
    std::vector<Block> blocks;
    std::vector<Rat> weight;
    std::vector<std::vector<int>> blocks_of_vertex; // sigma indices, ascending
    std::vector<StageSnapshot> stages;
    std::vector<int> support; // vertices of the collage

    Rat total() const {
        Rat t;
        for (const Rat& w : weight) t += w;
        return t;
    }
};

// Runs stages 1-6 on a collage graph (vertex weight 5, edge weight -3, then
// redistribution onto blocks).  Requires the graph to be K4/F2/F3-free with
// at least one triangle; throws precondition_error otherwise.
BlockWeights assign_block_weights(const Graph& collage_graph);

// First sigma-ordered block with strictly positive weight.
std::optional<int> positive_block(const BlockWeights& w);

// Edges of block X that can be removed: for a triangle, one edge in no
// 4-cycle of any F0_minus copy; for a K4_minus, a pair {x_i y, x_i z} with
// neither edge in such a 4-cycle.  Their absence contradicts the structural
// guarantees, so none-found throws falsification_error with the instance.
std::vector<Edge> removable_edges(const Graph& collage_graph, const BlockWeights& w,
                                  int block_index);

// Recursive very good colouring of a collage satisfying the density and
// dense-subset conditions: no monochromatic triangle, zero crrbb, all
// non-triangle edges blue.  The output is verified; failure throws
// falsification_error carrying the serialized instance.
TwoColouring very_good_colouring(const Collage& c);

} // namespace trg

#endif
