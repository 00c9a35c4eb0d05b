#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trg {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw invalid_argument_error("negative vertex count");
    for (const Edge& e : edges) {
        if (e.u == e.v) throw invalid_argument_error("self-loop");
        if (e.u < 0 || e.v >= n) throw invalid_argument_error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw invalid_argument_error("duplicate edge");
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_ptr_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.adj_ptr_[e.u + 1];
        ++g.adj_ptr_[e.v + 1];
    }
    for (int v = 0; v < n; ++v) g.adj_ptr_[v + 1] += g.adj_ptr_[v];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<int> cursor(g.adj_ptr_.begin(), g.adj_ptr_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adj_[cursor[e.u]++] = e.v;
        g.adj_[cursor[e.v]++] = e.u;
    }
    for (int v = 0; v < n; ++v) {
        std::sort(g.adj_.begin() + g.adj_ptr_[v], g.adj_.begin() + g.adj_ptr_[v + 1]);
    }
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edges(n, std::move(edges));
}

int Graph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return -1;
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

EdgeSubset EdgeSubset::from_edges(int n, std::vector<Edge> edges) {
    for (const Edge& e : edges) {
        if (e.u == e.v) throw invalid_argument_error("self-loop");
        if (e.u < 0 || e.v >= n) throw invalid_argument_error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return EdgeSubset{n, std::move(edges)};
}

bool EdgeSubset::contains(int u, int v) const {
    Edge e(u, v);
    return std::binary_search(edges.begin(), edges.end(), e);
}

Graph sample_gnp(int n, double p, RngSpec rng, int max_n) {
    Rng r(rng);
    return sample_gnp_with(n, p, r, max_n);
}

Graph sample_gnp_with(int n, double p, Rng& r, int max_n) {
    if (n < 0) throw invalid_argument_error("negative vertex count");
    if (n > max_n) throw invalid_argument_error("vertex count above configured maximum");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_argument_error("edge probability outside [0,1]");

    // One draw per pair keeps sampling bit-reproducible across platforms
    // (integer stream plus an exact double comparison).
    std::vector<Edge> edges;
    if (p > 0.0) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (r.next_unit() < p) edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph graph_union(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) throw invalid_argument_error("graph union with mismatched vertex counts");
    std::vector<Edge> edges;
    edges.reserve(a.edges().size() + b.edges().size());
    std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                   std::back_inserter(edges));
    return Graph::from_edges(a.n(), std::move(edges));
}

long long edges_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<std::uint8_t> in_a(g.n(), 0), in_b(g.n(), 0);
    for (int v : a) {
        g.check_vertex(v);
        in_a[v] = 1;
    }
    for (int v : b) {
        g.check_vertex(v);
        in_b[v] = 1;
    }
    long long count = 0;
    for (const Edge& e : g.edges()) {
        if ((in_a[e.u] && in_b[e.v]) || (in_b[e.u] && in_a[e.v])) ++count;
    }
    return count;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> new_label(g.n(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        g.check_vertex(sorted[i]);
        new_label[sorted[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (new_label[e.u] >= 0 && new_label[e.v] >= 0) {
            edges.emplace_back(new_label[e.u], new_label[e.v]);
        }
    }
    return InducedSubgraph{Graph::from_edges(static_cast<int>(sorted.size()), std::move(edges)),
                           std::move(sorted)};
}

bool max_degree_within(const Graph& g, double np_bound) {
    return g.max_degree() <= 2.0 * np_bound;
}

bool edges_between_within(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                          double p, double cap_a, double cap_b) {
    double n = g.n();
    double bound = static_cast<double>(a.size()) * static_cast<double>(b.size()) * p +
                   cap_a * cap_b * p / std::pow(std::log(n), 3);
    return static_cast<double>(edges_between(g, a, b)) <= bound;
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw parse_error("edge list: missing header");
    if (n < 0 || m < 0) throw parse_error("edge list: negative header value");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw parse_error("edge list: truncated");
        if (u == v) throw parse_error("edge list: loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::vector<Edge> check = edges;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
        throw parse_error("edge list: duplicate edge");
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

} // namespace trg
