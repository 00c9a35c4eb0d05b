#ifndef TRG_CENSUS_HPP
#define TRG_CENSUS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "patterns.hpp"
#include "rational.hpp"

namespace trg {

// One subgraph copy: pattern vertex i sits on host vertex map[i].  The list is
// deduplicated to one representative per host edge subset, so its size is the
// copy count N_F(G).
struct Copy {
    std::vector<int> map;
};

struct CopyList {
    std::vector<Copy> copies;
    std::size_t count() const { return copies.size(); }
};

// Number of copies of `f` in `g` (distinct edge-subset images).  Uses closed
// forms for K3/K12/C4/K2_10/K2_10_plus and the backtracking matcher otherwise.
std::uint64_t count_copies(const Graph& g, const Pattern& f);

// All copies, one vertex map per distinct edge image.  `limit` aborts runaway
// enumerations (0 = unlimited).
CopyList enumerate_copies(const Graph& g, const Pattern& f, std::size_t limit = 0);

// Host edge indices of one copy.
std::vector<int> copy_edge_indices(const Graph& g, const Pattern& f, const Copy& c);

// Number of embeddings of `f` into itself.
std::uint64_t automorphism_count(const Pattern& f);

// max { e(J)/v(J) : J subgraph of f } as an exact rational (exhaustive subset
// scan; patterns are small).
Rat max_subgraph_density(const Pattern& f);

// Maximal (greedy, deterministic lexicographic triangle order) set of
// pairwise edge-disjoint triangles, optionally restricted to an induced
// vertex subset.  Triangles are sorted vertex triples in host labels.
std::vector<std::array<int, 3>> greedy_edge_disjoint_triangles(
    const Graph& g, const std::optional<std::vector<int>>& restrict_to = std::nullopt);

// Vertex subsets witnessing (|U|, e(U)) in {(4,>=6), (5,>=7), (8,>=12)}.  An
// empty list certifies the very-well-behaved density condition.
struct DensePairViolation {
    std::vector<int> vertices;
    int edge_count = 0;
};
std::vector<DensePairViolation> dense_pair_violations(const Graph& g, int max_vertices = 64);

// Triangles as sorted vertex triples, lexicographic order.
std::vector<std::array<int, 3>> all_triangles(const Graph& g);

} // namespace trg

#endif
