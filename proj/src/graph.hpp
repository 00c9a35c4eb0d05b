#ifndef TRG_GRAPH_HPP
#define TRG_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace trg {

// Unordered vertex pair, normalised so u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Immutable simple graph on vertices 0..n-1.  Edges are kept sorted, with a
// CSR adjacency derived from them, so membership tests are O(log deg) and
// neighbour scans are cache-friendly.  Instances are safe to share across
// threads once built.
class Graph {
public:
    Graph() = default;

    // Validates, sorts and rejects loops/duplicates/out-of-range endpoints.
    static Graph from_edges(int n, std::vector<Edge> edges);
    static Graph empty(int n) { return from_edges(n, {}); }
    static Graph complete(int n);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Index of {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const;

    std::span<const int> neighbours(int v) const {
        check_vertex(v);
        return {adj_.data() + adj_ptr_[v], adj_.data() + adj_ptr_[v + 1]};
    }
    int degree(int v) const {
        check_vertex(v);
        return adj_ptr_[v + 1] - adj_ptr_[v];
    }
    int max_degree() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw invalid_argument_error("vertex out of range");
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_ptr_;
    std::vector<int> adj_;
};

// Edge set over the complete graph on n labelled vertices; carrier for red
// subgraphs, cores, dangerous-pair sets and similar.
struct EdgeSubset {
    int n = 0;
    std::vector<Edge> edges; // sorted, unique

    static EdgeSubset from_edges(int n, std::vector<Edge> edges);
    bool contains(int u, int v) const;
    Graph to_graph() const { return Graph::from_edges(n, edges); }
};

struct InducedSubgraph {
    Graph graph;                 // relabelled to 0..|U|-1
    std::vector<int> old_label;  // new label -> old label
};

inline constexpr int kDefaultMaxSampleVertices = 100000;

// G(n, p): every pair independently with probability p, deterministic per
// (master_seed, stream_id).
Graph sample_gnp(int n, double p, RngSpec rng, int max_n = kDefaultMaxSampleVertices);

// Same, drawing from an existing stream (callers with substreams).
Graph sample_gnp_with(int n, double p, Rng& rng, int max_n = kDefaultMaxSampleVertices);

Graph graph_union(const Graph& a, const Graph& b);

// Edges with one endpoint in `a` and the other in `b`; an edge inside the
// intersection is counted once.
long long edges_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Typical-property predicates; asserted only statistically, never as
// invariants.
bool max_degree_within(const Graph& g, double np_bound);             // max deg <= 2np
bool edges_between_within(const Graph& g, const std::vector<int>& a, // e(A,B) bound
                          const std::vector<int>& b, double p, double cap_a, double cap_b);

// Edge-list text format: "n m" then one "u v" line per edge, 0 <= u < v < n.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

} // namespace trg

#endif
