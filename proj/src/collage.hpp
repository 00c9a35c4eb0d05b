#ifndef TRG_COLLAGE_HPP
#define TRG_COLLAGE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace trg {

enum class HyperedgeKind : std::uint8_t { k3, f0_minus, f1_minus };

// One copy of K3, F0_minus or F1_minus, stored by host edge indices.
struct Hyperedge {
    HyperedgeKind kind;
    std::vector<int> edge_indices; // sorted
};

// Hypergraph on E(host) whose hyperedges are the copies above; components
// partition the host edges (isolated edges are singleton components).
struct CollageHypergraph {
    std::vector<Hyperedge> hyperedges;
    std::vector<int> component_of_edge; // host edge index -> component id
    int component_count = 0;
};

CollageHypergraph build_collage_hypergraph(const Graph& g);

// One component, materialised as its own small graph.
struct Collage {
    int host_n = 0;
    std::vector<Edge> host_edges;  // sorted, host labels
    std::vector<int> vertices;     // support, host labels, sorted
    Graph local;                   // relabelled 0..|support|-1, collage edges only
    std::vector<int> local_to_host;

    int edge_count() const { return static_cast<int>(host_edges.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    Rat density() const { return Rat(edge_count(), vertex_count()); }
};

Collage make_collage(int host_n, std::vector<Edge> host_edges);

// One collage per component, ordered by smallest host edge; they partition
// E(g).
std::vector<Collage> maximal_collages(const Graph& g);

// Decompose an arbitrary edge set into maximal collages of its own hypergraph.
std::vector<Collage> decompose_edges(int host_n, const std::vector<Edge>& edges);

// --- well-behavedness --------------------------------------------------

enum class Verdict { yes, no, indeterminate };

enum class DensityMode { exact, sufficient };

struct BehaviourOptions {
    double log_base = 2.718281828459045; // natural log unless overridden
    int exact_hyperedge_cap = 24;        // exact sub-collage scan refused above
    int dense_scan_vertex_cap = 64;
};

struct BehaviourReport {
    Verdict verdict = Verdict::indeterminate;
    bool size_ok = false;      // v(C) <= log n
    Verdict density_ok = Verdict::indeterminate;
    Rat max_density{0, 1};     // densest certified value (mode dependent)
    std::vector<Edge> witness; // a too-dense sub-collage, host labels
    std::string detail;
};

// Condition (i): v(C) <= log n.  Condition (ii): every sub-collage C' has
// e(C')/v(C') < 5/3 — checked exactly by scanning connected hyperedge unions,
// or certified sufficiently by the densest-subgraph density of the underlying
// graph.
BehaviourReport is_well_behaved(const Collage& c, int host_n, DensityMode mode,
                                const BehaviourOptions& opts = {});

// Well-behaved and free of (4,6)/(5,7)/(8,12) dense subsets.
struct VeryWellBehavedReport {
    Verdict verdict = Verdict::indeterminate;
    BehaviourReport behaviour;
    bool dense_free = false;
    std::vector<int> dense_witness; // local labels
    int dense_witness_edges = 0;
};
VeryWellBehavedReport is_very_well_behaved(const Collage& c, int host_n, DensityMode mode,
                                           const BehaviourOptions& opts = {});

// The discharging precondition (no K4, F2, F3), implied by the dense-subset
// condition but cheap to check directly.
bool contains_k4_f2_f3(const Graph& g);

// Exact max over subgraphs J of e(J)/v(J); subset scan for small graphs,
// max-flow refinement otherwise.
Rat densest_subgraph_density(const Graph& g);

// --- core extraction ---------------------------------------------------

struct CoreStepSnapshot {
    int step;  // 1-based; step 1 seeds the first edge
    int edges;
    int vertices;
    int degenerate_count;
};

enum class CoreHalt { log_cap, vertex_cap, exhausted };

// Replayable trace of the core-extraction run.  The four classic logs are
// kept verbatim; `regular_root_high` carries one extra orientation bit per regular
// step, without which the root edge plus three new vertices underdetermine
// the F0_minus copy (see replay_core).
struct CoreLog {
    std::vector<int> lv;                                  // vertex sequence
    std::vector<Edge> le;                                 // edge sequence
    std::vector<int> lo;                                  // 1-based root positions
    std::vector<std::pair<int, std::vector<Edge>>> ld;    // (step, new edges)
    std::vector<std::uint8_t> regular_root_high;          // u1 == max endpoint?
    std::vector<CoreStepSnapshot> snapshots;
    std::vector<Edge> core;                               // C * = C_{i-1} at halt
    CoreHalt halt = CoreHalt::exhausted;
};

struct CoreOptions {
    double log_base = 2.718281828459045;
    // Overrides the |L_V| > log n halting bound when set.
    std::optional<double> vertex_cap;
    // Total order on E(K_n) in host labels; lexicographic when unset.  Replay
    // must be given the same order.
    std::function<bool(const Edge&, const Edge&)> edge_less;
};

// Grows a core from one seed edge: regular steps glue an F0_minus copy onto
// an existing triangle (+3 vertices, +5 edges, rooted at the triangle edge on
// the copy's 4-cycle, minimising the root position in L_E); degenerate steps
// add any partially-overlapping K3/F0_minus/F1_minus copy and are logged in
// L_D.  Halts when |L_D| = 7, |L_V| > log n, or the collage is exhausted.
CoreLog extract_core(const Collage& c, int host_n, const CoreOptions& opts = {});

// Rebuilds L_E from (L_V, L_O, L_D, orientation bits) alone; used to check
// the logs are lossless.  `edge_less` must match the extraction order.
std::vector<Edge> replay_core(
    const CoreLog& log,
    const std::function<bool(const Edge&, const Edge&)>& edge_less = {});

// d <= 3e - 5v + 7 <= 21 d at every step (d = degenerate count so far).
bool core_density_audit(const CoreLog& log, std::string* detail = nullptr);

} // namespace trg

#endif
