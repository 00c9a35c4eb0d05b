#ifndef TRG_COLOURING_HPP
#define TRG_COLOURING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace trg {

enum class Colour : std::uint8_t { red = 0, blue = 1 };

inline char colour_char(Colour c) { return c == Colour::red ? 'r' : 'b'; }

// Red/blue map over the edges of one universe graph.  Partial until every
// edge is set.
class TwoColouring {
public:
    TwoColouring() = default;
    explicit TwoColouring(std::shared_ptr<const Graph> g)
        : g_(std::move(g)), colour_(g_->edges().size(), kUnset) {}

    const Graph& graph() const { return *g_; }
    std::shared_ptr<const Graph> graph_ptr() const { return g_; }

    bool is_set(int edge_index) const { return colour_[edge_index] != kUnset; }
    bool complete() const;

    void set(int edge_index, Colour c) { colour_[edge_index] = static_cast<std::uint8_t>(c); }
    void set(int u, int v, Colour c);

    Colour get(int edge_index) const;
    Colour get(int u, int v) const;
    std::optional<Colour> try_get(int u, int v) const;

    long long count(Colour c) const;
    void fill(Colour c);

    // Edge subset of one colour class over the universe.
    EdgeSubset colour_class(Colour c) const;

private:
    static constexpr std::uint8_t kUnset = 2;
    std::shared_ptr<const Graph> g_;
    std::vector<std::uint8_t> colour_;
};

// --- obstruction detection -------------------------------------------------

std::vector<std::array<int, 3>> monochromatic_triangles(const TwoColouring& col);

// 4-cycles carrying two adjacent red and two adjacent blue edges; one count
// per coloured 4-cycle.  Cycles are reported as (red apex, blue apex, u, v)
// with u < v the mixed vertices.
struct CrrbbCopy {
    int red_apex;
    int blue_apex;
    int u;
    int v;
};
std::uint64_t count_crrbb(const TwoColouring& col);
std::vector<CrrbbCopy> enumerate_crrbb(const TwoColouring& col);

// 5-cycles with exactly one red edge.  Reported as (u1, u2, w1, w, w2): red
// edge u1u2, blue path u1-w1-w-w2-u2.
struct CrbbbbCopy {
    int u1, u2, w1, w, w2;
};
std::uint64_t count_crbbbb(const TwoColouring& col);
std::vector<CrbbbbCopy> enumerate_crbbbb(const TwoColouring& col);

// Pairs {x,y} of K_n with both a blue-blue and a red-red wedge over them.  By
// default only pairs that are not universe edges are reported (the second
// round threat model); include_graph_edges widens to all pairs.
EdgeSubset dangerous_pairs(const TwoColouring& col, bool include_graph_edges = false);

// Wedges {wu1, wu2} of non-edges whose completion is blocked both ways:
// u1u2 red and a blue path u1-w1-w-w2-u2 with w1 != w2.
struct DangerousK12 {
    int w;  // centre
    int u1; // leaves, u1 < u2
    int u2;
};
std::vector<DangerousK12> dangerous_k12(const TwoColouring& col);

// --- goodness --------------------------------------------------------------

struct GoodnessReport {
    bool good = false;
    // 0 = none, 1 = monochromatic triangle, 2 = non-triangle edge coloured
    // red, 3 = too many crrbb.
    int violated_condition = 0;
    std::array<int, 3> witness_triangle{{-1, -1, -1}};
    Edge witness_edge{};
    std::uint64_t crrbb = 0;
};

// Conditions: no monochromatic triangle; every edge outside all triangles is
// blue; fewer than t crrbb copies.  t = 1 is the "very good" test.
GoodnessReport is_t_good(const TwoColouring& col, std::uint64_t t);

struct ObstructionReport {
    std::vector<std::array<int, 3>> mono_triangles;
    std::uint64_t crrbb_count = 0;
    std::uint64_t crbbbb_count = 0;
    EdgeSubset dangerous_pair_set;
    std::vector<DangerousK12> dangerous_k12_list;
};
ObstructionReport obstruction_report(const TwoColouring& col, bool include_graph_edges = false);

// --- triangle-free search ----------------------------------------------

enum class SearchStatus { found, impossible, budget_exhausted };

struct SearchResult {
    SearchStatus status;
    std::optional<TwoColouring> colouring;
    long long nodes = 0;
};

// Backtracking search for a colouring with no monochromatic triangle.  Edges
// are ordered by descending triangle membership; colouring an edge propagates
// through its triangles.  After success, edges lying in no triangle are
// recoloured blue when `recolour_non_triangle_blue` is set.
SearchResult find_triangle_free_colouring(std::shared_ptr<const Graph> g, long long node_budget,
                                          bool recolour_non_triangle_blue = true);

// --- io ----------------------------------------------------------------

// Lines "u v c" with c in {r,b}.
TwoColouring read_colouring(std::shared_ptr<const Graph> g, const std::string& text);
std::string write_colouring(const TwoColouring& col);

} // namespace trg

#endif
