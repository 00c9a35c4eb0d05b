#include "colouring.hpp"

#include <algorithm>
#include <sstream>

#include "census.hpp"
#include "errors.hpp"

namespace trg {

bool TwoColouring::complete() const {
    return std::all_of(colour_.begin(), colour_.end(),
                       [](std::uint8_t c) { return c != kUnset; });
}

void TwoColouring::set(int u, int v, Colour c) {
    int i = g_->edge_index(u, v);
    if (i < 0) throw invalid_argument_error("colouring a non-edge");
    set(i, c);
}

Colour TwoColouring::get(int edge_index) const {
    std::uint8_t c = colour_[edge_index];
    if (c == kUnset) throw invalid_argument_error("edge not coloured");
    return static_cast<Colour>(c);
}

Colour TwoColouring::get(int u, int v) const {
    int i = g_->edge_index(u, v);
    if (i < 0) throw invalid_argument_error("querying a non-edge");
    return get(i);
}

std::optional<Colour> TwoColouring::try_get(int u, int v) const {
    int i = g_->edge_index(u, v);
    if (i < 0 || colour_[i] == kUnset) return std::nullopt;
    return static_cast<Colour>(colour_[i]);
}

long long TwoColouring::count(Colour c) const {
    return std::count(colour_.begin(), colour_.end(), static_cast<std::uint8_t>(c));
}

void TwoColouring::fill(Colour c) {
    std::fill(colour_.begin(), colour_.end(), static_cast<std::uint8_t>(c));
}

EdgeSubset TwoColouring::colour_class(Colour c) const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g_->edges().size(); ++i) {
        if (colour_[i] == static_cast<std::uint8_t>(c)) edges.push_back(g_->edges()[i]);
    }
    return EdgeSubset::from_edges(g_->n(), std::move(edges));
}

namespace {

void require_complete(const TwoColouring& col) {
    if (!col.complete()) throw invalid_argument_error("operation requires a complete colouring");
}

} // namespace

std::vector<std::array<int, 3>> monochromatic_triangles(const TwoColouring& col) {
    require_complete(col);
    const Graph& g = col.graph();
    std::vector<std::array<int, 3>> out;
    for (const auto& t : all_triangles(g)) {
        Colour a = col.get(t[0], t[1]);
        if (a == col.get(t[0], t[2]) && a == col.get(t[1], t[2])) out.push_back(t);
    }
    return out;
}

namespace {

// Crrbb copies decompose by their apex pair: red apex w, blue apex x and two
// mixed vertices drawn from M(w,x) = { z : wz red, xz blue }.
template <typename Fn>
void scan_crrbb(const TwoColouring& col, Fn&& per_pair) {
    const Graph& g = col.graph();
    for (int w = 0; w < g.n(); ++w) {
        for (int x = 0; x < g.n(); ++x) {
            if (w == x) continue;
            std::vector<int> mixed;
            for (int z : g.neighbours(w)) {
                if (z == x) continue;
                if (col.get(w, z) != Colour::red) continue;
                auto c = col.try_get(x, z);
                if (c && *c == Colour::blue) mixed.push_back(z);
            }
            if (mixed.size() >= 2) per_pair(w, x, mixed);
        }
    }
}

} // namespace

std::uint64_t count_crrbb(const TwoColouring& col) {
    require_complete(col);
    std::uint64_t total = 0;
    scan_crrbb(col, [&](int, int, const std::vector<int>& mixed) {
        std::uint64_t k = mixed.size();
        total += k * (k - 1) / 2;
    });
    return total;
}

std::vector<CrrbbCopy> enumerate_crrbb(const TwoColouring& col) {
    require_complete(col);
    std::vector<CrrbbCopy> out;
    scan_crrbb(col, [&](int w, int x, const std::vector<int>& mixed) {
        for (std::size_t i = 0; i < mixed.size(); ++i)
            for (std::size_t j = i + 1; j < mixed.size(); ++j)
                out.push_back({w, x, mixed[i], mixed[j]});
    });
    return out;
}

namespace {

// Each one-red-edge 5-cycle is listed once from its red edge: blue paths
// u1-w1-w-w2-u2 between the red endpoints.
template <typename Fn>
void scan_crbbbb(const TwoColouring& col, Fn&& emit) {
    const Graph& g = col.graph();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (col.get(static_cast<int>(i)) != Colour::red) continue;
        const Edge e = g.edges()[i];
        const int u1 = e.u, u2 = e.v;
        for (int w1 : g.neighbours(u1)) {
            if (w1 == u2 || col.get(u1, w1) != Colour::blue) continue;
            for (int w2 : g.neighbours(u2)) {
                if (w2 == u1 || w2 == w1 || col.get(u2, w2) != Colour::blue) continue;
                for (int w : g.neighbours(w1)) {
                    if (w == u1 || w == u2 || w == w2) continue;
                    if (col.get(w1, w) != Colour::blue) continue;
                    auto c = col.try_get(w, w2);
                    if (c && *c == Colour::blue) emit(u1, u2, w1, w, w2);
                }
            }
        }
    }
}

} // namespace

std::uint64_t count_crbbbb(const TwoColouring& col) {
    require_complete(col);
    std::uint64_t total = 0;
    scan_crbbbb(col, [&](int, int, int, int, int) { ++total; });
    return total;
}

std::vector<CrbbbbCopy> enumerate_crbbbb(const TwoColouring& col) {
    require_complete(col);
    std::vector<CrbbbbCopy> out;
    scan_crbbbb(col, [&](int u1, int u2, int w1, int w, int w2) {
        out.push_back({u1, u2, w1, w, w2});
    });
    return out;
}

EdgeSubset dangerous_pairs(const TwoColouring& col, bool include_graph_edges) {
    require_complete(col);
    const Graph& g = col.graph();
    const int n = g.n();
    // Wedge marks per pair, packed in a flat triangular bitmap.
    auto pair_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * n + b;
    };
    std::vector<std::uint8_t> marks(static_cast<std::size_t>(n) * n, 0);
    for (int apex = 0; apex < n; ++apex) {
        auto nb = g.neighbours(apex);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            Colour ci = col.get(apex, nb[i]);
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (col.get(apex, nb[j]) != ci) continue;
                marks[pair_index(nb[i], nb[j])] |=
                    ci == Colour::red ? std::uint8_t{1} : std::uint8_t{2};
            }
        }
    }
    std::vector<Edge> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (marks[pair_index(a, b)] != 3) continue;
            if (!include_graph_edges && g.has_edge(a, b)) continue;
            out.emplace_back(a, b);
        }
    }
    return EdgeSubset::from_edges(n, std::move(out));
}

std::vector<DangerousK12> dangerous_k12(const TwoColouring& col) {
    require_complete(col);
    const Graph& g = col.graph();
    const int n = g.n();
    auto blue_wedge_mates = [&](int a, int b) {
        // Vertices z with za and zb both blue edges.
        std::vector<int> out;
        for (int z : g.neighbours(a)) {
            if (z == b || col.get(a, z) != Colour::blue) continue;
            auto c = col.try_get(b, z);
            if (c && *c == Colour::blue) out.push_back(z);
        }
        return out;
    };
    std::vector<DangerousK12> out;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (col.get(static_cast<int>(i)) != Colour::red) continue;
        const Edge e = g.edges()[i];
        const int u1 = e.u, u2 = e.v;
        for (int w = 0; w < n; ++w) {
            if (w == u1 || w == u2) continue;
            if (g.has_edge(w, u1) || g.has_edge(w, u2)) continue;
            std::vector<int> s1 = blue_wedge_mates(w, u1);
            std::vector<int> s2 = blue_wedge_mates(w, u2);
            if (s1.empty() || s2.empty()) continue;
            bool distinct = s1.size() > 1 || s2.size() > 1 || s1[0] != s2[0];
            if (distinct) out.push_back({w, u1, u2});
        }
    }
    std::sort(out.begin(), out.end(), [](const DangerousK12& a, const DangerousK12& b) {
        return std::tie(a.w, a.u1, a.u2) < std::tie(b.w, b.u1, b.u2);
    });
    return out;
}

GoodnessReport is_t_good(const TwoColouring& col, std::uint64_t t) {
    require_complete(col);
    const Graph& g = col.graph();
    GoodnessReport r;

    auto mono = monochromatic_triangles(col);
    if (!mono.empty()) {
        r.violated_condition = 1;
        r.witness_triangle = mono.front();
        return r;
    }

    std::vector<std::uint8_t> in_triangle(g.edges().size(), 0);
    for (const auto& tri : all_triangles(g)) {
        in_triangle[g.edge_index(tri[0], tri[1])] = 1;
        in_triangle[g.edge_index(tri[0], tri[2])] = 1;
        in_triangle[g.edge_index(tri[1], tri[2])] = 1;
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!in_triangle[i] && col.get(static_cast<int>(i)) == Colour::red) {
            r.violated_condition = 2;
            r.witness_edge = g.edges()[i];
            return r;
        }
    }

    r.crrbb = count_crrbb(col);
    if (r.crrbb >= t) {
        r.violated_condition = 3;
        return r;
    }
    r.good = true;
    return r;
}

ObstructionReport obstruction_report(const TwoColouring& col, bool include_graph_edges) {
    ObstructionReport rep;
    rep.mono_triangles = monochromatic_triangles(col);
    rep.crrbb_count = count_crrbb(col);
    rep.crbbbb_count = count_crbbbb(col);
    rep.dangerous_pair_set = dangerous_pairs(col, include_graph_edges);
    rep.dangerous_k12_list = dangerous_k12(col);
    return rep;
}

namespace {

struct TriangleSearch {
    const Graph& g;
    std::vector<std::array<int, 3>> triangle_edges; // edge indices per triangle
    std::vector<std::vector<int>> triangles_of_edge;
    std::vector<int> order;          // edge indices, most constrained first
    std::vector<std::uint8_t> state; // 0 red, 1 blue, 2 unset
    long long budget;
    long long nodes = 0;

    explicit TriangleSearch(const Graph& graph, long long node_budget)
        : g(graph), triangles_of_edge(graph.edges().size()), budget(node_budget) {
        for (const auto& t : all_triangles(g)) {
            std::array<int, 3> idx = {g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                                      g.edge_index(t[1], t[2])};
            int ti = static_cast<int>(triangle_edges.size());
            triangle_edges.push_back(idx);
            for (int e : idx) triangles_of_edge[e].push_back(ti);
        }
        // Only edges lying in triangles are decision points; the rest stay
        // unset and come out blue.
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            if (!triangles_of_edge[i].empty()) order.push_back(static_cast<int>(i));
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return triangles_of_edge[a].size() > triangles_of_edge[b].size();
        });
        state.assign(g.edges().size(), 2);
    }

    // Set edge, propagate forced edges; returns false on a monochromatic
    // triangle.  Trail collects assignments for undo.
    bool assign(int e, std::uint8_t c, std::vector<int>& trail) {
        state[e] = c;
        trail.push_back(e);
        std::vector<int> queue = {e};
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (int ti : triangles_of_edge[cur]) {
                const auto& te = triangle_edges[ti];
                int unset = -1;
                int col_count[2] = {0, 0};
                for (int ei : te) {
                    if (state[ei] == 2) unset = ei;
                    else ++col_count[state[ei]];
                }
                if (unset < 0) {
                    if (col_count[0] == 3 || col_count[1] == 3) return false;
                } else if (col_count[0] == 2 || col_count[1] == 2) {
                    std::uint8_t forced = col_count[0] == 2 ? 1 : 0;
                    if (state[unset] == 2) {
                        state[unset] = forced;
                        trail.push_back(unset);
                        queue.push_back(unset);
                    }
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            state[trail.back()] = 2;
            trail.pop_back();
        }
    }

    SearchStatus solve(std::size_t depth, std::vector<int>& trail) {
        while (depth < order.size() && state[order[depth]] != 2) ++depth;
        if (depth == order.size()) return SearchStatus::found;
        if (++nodes > budget) return SearchStatus::budget_exhausted;
        int e = order[depth];
        for (std::uint8_t c : {std::uint8_t{1}, std::uint8_t{0}}) { // blue first
            std::size_t mark = trail.size();
            if (assign(e, c, trail)) {
                SearchStatus s = solve(depth + 1, trail);
                if (s != SearchStatus::impossible) return s;
            }
            undo(trail, mark);
        }
        return SearchStatus::impossible;
    }
};

} // namespace

SearchResult find_triangle_free_colouring(std::shared_ptr<const Graph> g, long long node_budget,
                                          bool recolour_non_triangle_blue) {
    TriangleSearch search(*g, node_budget);
    std::vector<int> trail;
    SearchStatus status = search.solve(0, trail);
    SearchResult result{status, std::nullopt, search.nodes};
    if (status != SearchStatus::found) return result;

    TwoColouring col(g);
    std::vector<std::uint8_t> in_triangle(g->edges().size(), 0);
    for (const auto& te : search.triangle_edges)
        for (int e : te) in_triangle[e] = 1;
    for (std::size_t i = 0; i < g->edges().size(); ++i) {
        if (search.state[i] == 2 || (recolour_non_triangle_blue && !in_triangle[i])) {
            col.set(static_cast<int>(i), Colour::blue);
        } else {
            col.set(static_cast<int>(i), search.state[i] == 0 ? Colour::red : Colour::blue);
        }
    }
    result.colouring = std::move(col);
    return result;
}

TwoColouring read_colouring(std::shared_ptr<const Graph> g, const std::string& text) {
    TwoColouring col(g);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u = 0, v = 0;
        char c = 0;
        if (!(ls >> u >> v >> c)) throw parse_error("colouring: bad line: " + line);
        if (c != 'r' && c != 'b') throw parse_error("colouring: colour must be r or b");
        int idx = g->edge_index(u, v);
        if (idx < 0) throw parse_error("colouring: unknown edge in line: " + line);
        col.set(idx, c == 'r' ? Colour::red : Colour::blue);
    }
    return col;
}

std::string write_colouring(const TwoColouring& col) {
    std::ostringstream out;
    const Graph& g = col.graph();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!col.is_set(static_cast<int>(i))) continue;
        const Edge& e = g.edges()[i];
        out << e.u << ' ' << e.v << ' ' << colour_char(col.get(static_cast<int>(i))) << '\n';
    }
    return out.str();
}

} // namespace trg
