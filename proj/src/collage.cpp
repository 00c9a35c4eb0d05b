#include "collage.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

#include "census.hpp"
#include "errors.hpp"

namespace trg {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> copy_edges_sorted(const Graph& g, const Pattern& f, const Copy& c) {
    return copy_edge_indices(g, f, c);
}

} // namespace

CollageHypergraph build_collage_hypergraph(const Graph& g) {
    CollageHypergraph h;
    for (const auto& t : all_triangles(g)) {
        std::vector<int> idx = {g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                                g.edge_index(t[1], t[2])};
        std::sort(idx.begin(), idx.end());
        h.hyperedges.push_back({HyperedgeKind::k3, std::move(idx)});
    }
    const Pattern& f0m = pattern("F0_minus");
    for (const Copy& c : enumerate_copies(g, f0m).copies) {
        h.hyperedges.push_back({HyperedgeKind::f0_minus, copy_edges_sorted(g, f0m, c)});
    }
    const Pattern& f1m = pattern("F1_minus");
    for (const Copy& c : enumerate_copies(g, f1m).copies) {
        h.hyperedges.push_back({HyperedgeKind::f1_minus, copy_edges_sorted(g, f1m, c)});
    }

    UnionFind uf(g.m());
    for (const Hyperedge& he : h.hyperedges) {
        for (std::size_t i = 1; i < he.edge_indices.size(); ++i) {
            uf.merge(he.edge_indices[0], he.edge_indices[i]);
        }
    }
    h.component_of_edge.assign(g.m(), -1);
    int next_id = 0;
    for (int e = 0; e < g.m(); ++e) {
        int root = uf.find(e);
        if (h.component_of_edge[root] < 0) h.component_of_edge[root] = next_id++;
        h.component_of_edge[e] = h.component_of_edge[root];
    }
    h.component_count = next_id;
    return h;
}

Collage make_collage(int host_n, std::vector<Edge> host_edges) {
    std::sort(host_edges.begin(), host_edges.end());
    Collage c;
    c.host_n = host_n;
    c.host_edges = std::move(host_edges);
    for (const Edge& e : c.host_edges) {
        c.vertices.push_back(e.u);
        c.vertices.push_back(e.v);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    std::vector<int> local_of(host_n, -1);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) local_of[c.vertices[i]] = static_cast<int>(i);
    std::vector<Edge> local_edges;
    local_edges.reserve(c.host_edges.size());
    for (const Edge& e : c.host_edges) local_edges.emplace_back(local_of[e.u], local_of[e.v]);
    c.local = Graph::from_edges(static_cast<int>(c.vertices.size()), std::move(local_edges));
    c.local_to_host = c.vertices;
    return c;
}

std::vector<Collage> maximal_collages(const Graph& g) {
    CollageHypergraph h = build_collage_hypergraph(g);
    std::vector<std::vector<Edge>> buckets(h.component_count);
    for (int e = 0; e < g.m(); ++e) buckets[h.component_of_edge[e]].push_back(g.edges()[e]);
    std::vector<Collage> out;
    out.reserve(buckets.size());
    for (auto& edges : buckets) out.push_back(make_collage(g.n(), std::move(edges)));
    return out;
}

std::vector<Collage> decompose_edges(int host_n, const std::vector<Edge>& edges) {
    return maximal_collages(Graph::from_edges(host_n, edges));
}

bool contains_k4_f2_f3(const Graph& g) {
    for (const char* name : {"K4", "F2", "F3"}) {
        if (count_copies(g, pattern(name)) > 0) return true;
    }
    return false;
}

// --- densest subgraph ----------------------------------------------------

namespace {

Rat densest_by_scan(const Graph& g) {
    int n = g.n();
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const Edge& e : g.edges()) {
        adj_mask[e.u] |= 1u << e.v;
        adj_mask[e.v] |= 1u << e.u;
    }
    Rat best(0, 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = __builtin_popcount(mask);
        int twice_e = 0;
        for (std::uint32_t rest = mask; rest;) {
            int b = __builtin_ctz(rest);
            rest &= rest - 1;
            twice_e += __builtin_popcount(adj_mask[b] & mask);
        }
        Rat d(twice_e / 2, v);
        if (best < d) best = d;
    }
    return best;
}

struct Dinic {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit Dinic(int n) : arcs(n), level(n), iter(n) {}

    void add(int from, int to, long long cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            long long f;
            while ((f = dfs(s, t, INT64_MAX)) > 0) flow += f;
        }
        return flow;
    }

    std::vector<bool> source_side(int s) {
        std::vector<bool> vis(arcs.size(), false);
        std::queue<int> q;
        vis[s] = true;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && !vis[a.to]) {
                    vis[a.to] = true;
                    q.push(a.to);
                }
            }
        }
        return vis;
    }
};

// Does g contain a subgraph with density strictly above a/b?  If so returns
// its vertex set.  Min cut of the standard density network equals
// 2bm - 2 max_U (b e(U) - a |U|).
std::optional<std::vector<int>> denser_than(const Graph& g, std::int64_t a, std::int64_t b) {
    const int n = g.n();
    const int s = n, t = n + 1;
    Dinic net(n + 2);
    for (int v = 0; v < n; ++v) {
        net.add(s, v, b * static_cast<long long>(g.degree(v)));
        net.add(v, t, 2 * a);
    }
    for (const Edge& e : g.edges()) {
        net.add(e.u, e.v, b);
        net.add(e.v, e.u, b);
    }
    long long cut = net.max_flow(s, t);
    if (cut >= 2 * b * static_cast<long long>(g.m())) return std::nullopt;
    std::vector<bool> side = net.source_side(s);
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
        if (side[v]) vertices.push_back(v);
    if (vertices.empty()) return std::nullopt;
    return vertices;
}

} // namespace

Rat densest_subgraph_density(const Graph& g) {
    if (g.m() == 0) return Rat(0, 1);
    if (g.n() <= 20) return densest_by_scan(g);
    // Flow refinement: every improving cut yields a strictly denser subgraph,
    // and densities live in a finite set, so this terminates.
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    auto count_inside = [&](const std::vector<int>& vs) {
        std::vector<std::uint8_t> in(g.n(), 0);
        for (int v : vs) in[v] = 1;
        int e = 0;
        for (const Edge& edge : g.edges())
            if (in[edge.u] && in[edge.v]) ++e;
        return e;
    };
    Rat best(g.m(), g.n());
    while (true) {
        auto improved = denser_than(g, best.num(), best.den());
        if (!improved) return best;
        Rat d(count_inside(*improved), static_cast<std::int64_t>(improved->size()));
        if (!(best < d)) return best;
        best = d;
    }
}

// --- well-behavedness ------------------------------------------------------

namespace {

// Enumerates connected hyperedge subsets exactly once, maintaining the union
// (e, v) incrementally; yields false from the callback to abort.
struct ConnectedSubsetScan {
    const Graph& g;
    const std::vector<Hyperedge>& hyperedges;
    std::vector<std::vector<int>> overlap; // hyperedge adjacency
    std::vector<int> edge_cover, vertex_cover;
    int e_count = 0, v_count = 0;
    std::vector<int> members;

    ConnectedSubsetScan(const Graph& graph, const std::vector<Hyperedge>& hes)
        : g(graph), hyperedges(hes), overlap(hes.size()), edge_cover(graph.m(), 0),
          vertex_cover(graph.n(), 0) {
        std::vector<std::vector<int>> hes_of_edge(graph.m());
        for (std::size_t i = 0; i < hes.size(); ++i) {
            for (int e : hes[i].edge_indices) hes_of_edge[e].push_back(static_cast<int>(i));
        }
        for (const auto& list : hes_of_edge) {
            for (std::size_t a = 0; a < list.size(); ++a)
                for (std::size_t b = a + 1; b < list.size(); ++b) {
                    overlap[list[a]].push_back(list[b]);
                    overlap[list[b]].push_back(list[a]);
                }
        }
        for (auto& o : overlap) {
            std::sort(o.begin(), o.end());
            o.erase(std::unique(o.begin(), o.end()), o.end());
        }
    }

    void push(int he) {
        members.push_back(he);
        for (int e : hyperedges[he].edge_indices) {
            if (edge_cover[e]++ == 0) {
                ++e_count;
                const Edge& edge = g.edges()[e];
                if (vertex_cover[edge.u]++ == 0) ++v_count;
                if (vertex_cover[edge.v]++ == 0) ++v_count;
            } else {
                ++vertex_cover[g.edges()[e].u];
                ++vertex_cover[g.edges()[e].v];
            }
        }
    }

    void pop() {
        int he = members.back();
        members.pop_back();
        for (int e : hyperedges[he].edge_indices) {
            const Edge& edge = g.edges()[e];
            if (--vertex_cover[edge.u] == 0) --v_count;
            if (--vertex_cover[edge.v] == 0) --v_count;
            if (--edge_cover[e] == 0) --e_count;
        }
    }

    template <typename Fn>
    bool run(Fn&& visit) {
        std::vector<std::uint8_t> forbidden(hyperedges.size(), 0);
        for (std::size_t start = 0; start < hyperedges.size(); ++start) {
            std::fill(forbidden.begin(), forbidden.end(), 0);
            for (std::size_t j = 0; j < start; ++j) forbidden[j] = 1;
            push(static_cast<int>(start));
            bool keep = expand(forbidden, visit);
            pop();
            if (!keep) return false;
        }
        return true;
    }

    template <typename Fn>
    bool expand(std::vector<std::uint8_t>& forbidden, Fn&& visit) {
        if (!visit(e_count, v_count)) return false;
        std::vector<int> ext;
        for (int m : members) {
            for (int nb : overlap[m]) {
                if (!forbidden[nb] &&
                    std::find(members.begin(), members.end(), nb) == members.end()) {
                    ext.push_back(nb);
                }
            }
        }
        std::sort(ext.begin(), ext.end());
        ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
        for (std::size_t i = 0; i < ext.size(); ++i) {
            push(ext[i]);
            std::vector<int> newly;
            for (std::size_t j = 0; j < i; ++j) {
                if (!forbidden[ext[j]]) {
                    forbidden[ext[j]] = 1;
                    newly.push_back(ext[j]);
                }
            }
            bool keep = expand(forbidden, visit);
            for (int u : newly) forbidden[u] = 0;
            pop();
            if (!keep) return false;
        }
        return true;
    }
};

} // namespace

BehaviourReport is_well_behaved(const Collage& c, int host_n, DensityMode mode,
                                const BehaviourOptions& opts) {
    BehaviourReport rep;
    double cap = std::log(static_cast<double>(host_n)) / std::log(opts.log_base);
    rep.size_ok = static_cast<double>(c.vertex_count()) <= cap;

    const Rat limit(5, 3);
    if (mode == DensityMode::exact) {
        CollageHypergraph h = build_collage_hypergraph(c.local);
        if (static_cast<int>(h.hyperedges.size()) > opts.exact_hyperedge_cap) {
            throw too_large_error("exact sub-collage scan refused: too many hyperedges");
        }
        Rat best(c.edge_count() == 1 ? 1 : 0, 2); // singleton collage density 1/2
        std::vector<Edge> witness;
        ConnectedSubsetScan scan(c.local, h.hyperedges);
        scan.run([&](int e, int v) {
            Rat d(e, v);
            if (best < d) {
                best = d;
                if (!(d < limit)) {
                    witness.clear();
                    for (int ei = 0; ei < c.local.m(); ++ei) {
                        if (scan.edge_cover[ei] > 0) {
                            const Edge& le = c.local.edges()[ei];
                            witness.emplace_back(c.local_to_host[le.u], c.local_to_host[le.v]);
                        }
                    }
                    return false; // violation found, stop
                }
            }
            return true;
        });
        rep.max_density = best;
        rep.density_ok = best < limit ? Verdict::yes : Verdict::no;
        rep.witness = std::move(witness);
    } else {
        Rat d = densest_subgraph_density(c.local);
        rep.max_density = d;
        // Sound one-sided certificate: sub-collage density never exceeds the
        // densest-subgraph density.
        rep.density_ok = d < limit ? Verdict::yes : Verdict::indeterminate;
        if (rep.density_ok == Verdict::indeterminate) {
            rep.detail = "densest-subgraph certificate failed; exact scan not run";
        }
    }

    if (!rep.size_ok) {
        rep.verdict = Verdict::no;
        rep.detail = "vertex support exceeds log n";
    } else if (rep.density_ok == Verdict::yes) {
        rep.verdict = Verdict::yes;
    } else if (rep.density_ok == Verdict::no) {
        rep.verdict = Verdict::no;
    } else {
        rep.verdict = Verdict::indeterminate;
    }
    return rep;
}

VeryWellBehavedReport is_very_well_behaved(const Collage& c, int host_n, DensityMode mode,
                                           const BehaviourOptions& opts) {
    VeryWellBehavedReport rep;
    rep.behaviour = is_well_behaved(c, host_n, mode, opts);
    auto violations = dense_pair_violations(c.local, opts.dense_scan_vertex_cap);
    rep.dense_free = violations.empty();
    if (!rep.dense_free) {
        rep.dense_witness = violations.front().vertices;
        rep.dense_witness_edges = violations.front().edge_count;
    }
    if (!rep.dense_free || rep.behaviour.verdict == Verdict::no) {
        rep.verdict = Verdict::no;
    } else {
        rep.verdict = rep.behaviour.verdict;
    }
    return rep;
}

// --- core extraction -------------------------------------------------------

namespace {

// Oriented view of one F0_minus copy: the anchor triangle, its root edge (the
// triangle edge on the copy's unique 4-cycle) and the three outside vertices
// in role order (u3, w1, w2):  new edges are u1-u3, u1-w2, u2-w1, u3-w1,
// u3-w2 where u1 is the degree-4 vertex.
struct F0View {
    std::array<int, 3> tri_edges;
    Edge root;
    int u1;
    std::array<int, 3> new_roles; // u3, w1, w2
    std::array<Edge, 5> new_edges;
    std::array<int, 8> all_edges;
};

std::vector<F0View> f0_views(const Graph& g) {
    const Pattern& f0m = pattern("F0_minus");
    std::vector<F0View> views;
    for (const Copy& c : enumerate_copies(g, f0m).copies) {
        const auto& m = c.map;
        auto idx = [&](int a, int b) { return g.edge_index(m[a], m[b]); };
        std::array<int, 8> all;
        {
            int k = 0;
            for (const Edge& pe : f0m.graph.edges()) all[k++] = idx(pe.u, pe.v);
            std::sort(all.begin(), all.end());
        }
        // Anchor triangle {u1,u2,w3} = pattern {0,1,5}; the swap automorphism
        // (1<->2, 4<->5) gives the second anchoring.
        for (int view = 0; view < 2; ++view) {
            int u2 = view == 0 ? 1 : 2;
            int w3 = view == 0 ? 5 : 4;
            int u3 = view == 0 ? 2 : 1;
            int w2 = view == 0 ? 4 : 5;
            F0View v;
            v.tri_edges = {idx(0, u2), idx(0, w3), idx(u2, w3)};
            std::sort(v.tri_edges.begin(), v.tri_edges.end());
            v.root = Edge(m[0], m[u2]);
            v.u1 = m[0];
            v.new_roles = {m[u3], m[3], m[w2]};
            v.new_edges = {Edge(m[0], m[u3]), Edge(m[0], m[w2]), Edge(m[u2], m[3]),
                           Edge(m[u3], m[3]), Edge(m[u3], m[w2])};
            v.all_edges = all;
            views.push_back(v);
        }
    }
    return views;
}

} // namespace

CoreLog extract_core(const Collage& c, int host_n, const CoreOptions& opts) {
    if (c.edge_count() == 0) throw invalid_argument_error("core extraction on empty collage");
    const Graph& g = c.local;
    const double vertex_cap =
        opts.vertex_cap ? *opts.vertex_cap
                        : std::log(static_cast<double>(host_n)) / std::log(opts.log_base);

    // The total edge order, given over host labels and lifted to local ones.
    std::function<bool(const Edge&, const Edge&)> less_host = opts.edge_less;
    if (!less_host) less_host = [](const Edge& a, const Edge& b) { return a < b; };
    auto less_local = [&](const Edge& a, const Edge& b) {
        return less_host(Edge(c.local_to_host[a.u], c.local_to_host[a.v]),
                         Edge(c.local_to_host[b.u], c.local_to_host[b.v]));
    };
    auto sort_local = [&](std::vector<Edge> v) {
        std::sort(v.begin(), v.end(), less_local);
        return v;
    };
    auto list_less = [&](const std::vector<Edge>& a, const std::vector<Edge>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less_local);
    };

    // All hyperedge copies of the collage, by local edge indices.
    CollageHypergraph h = build_collage_hypergraph(g);
    std::vector<F0View> views = f0_views(g);

    std::vector<std::uint8_t> in_ce(g.m(), 0);
    std::vector<std::uint8_t> in_cv(g.n(), 0);
    std::vector<int> position_of(g.m(), 0); // 1-based position in le
    CoreLog log;
    std::vector<Edge> le_local;
    int e_count = 0, v_count = 0;

    auto append_vertex = [&](int v) {
        in_cv[v] = 1;
        ++v_count;
        log.lv.push_back(c.local_to_host[v]);
    };
    auto append_edge = [&](const Edge& e) {
        int idx = g.edge_index(e.u, e.v);
        in_ce[idx] = 1;
        ++e_count;
        le_local.push_back(e);
        position_of[idx] = static_cast<int>(le_local.size());
        log.le.emplace_back(c.local_to_host[e.u], c.local_to_host[e.v]);
    };

    // Step 1: seed with the least edge.
    const Edge seed = *std::min_element(g.edges().begin(), g.edges().end(), less_local);
    append_vertex(seed.u);
    append_vertex(seed.v);
    append_edge(seed);
    log.snapshots.push_back({1, e_count, v_count, 0});

    int degenerate = 0;
    for (int step = 2;; ++step) {
        if (degenerate == 7) { log.halt = CoreHalt::log_cap; break; }
        if (static_cast<double>(log.lv.size()) > vertex_cap) { log.halt = CoreHalt::vertex_cap; break; }
        if (e_count == g.m()) { log.halt = CoreHalt::exhausted; break; }

        // Regular candidates: F0_minus views whose copy meets C_{i-1} in
        // exactly the anchor triangle (same three edges, same three
        // vertices), so a step adds exactly +3 vertices and +5 edges.
        const F0View* chosen = nullptr;
        int chosen_pos = 0;
        std::vector<Edge> chosen_new;
        for (const F0View& v : views) {
            int inside = 0;
            for (int ei : v.all_edges) inside += in_ce[ei];
            if (inside != 3) continue;
            if (!in_ce[v.tri_edges[0]] || !in_ce[v.tri_edges[1]] || !in_ce[v.tri_edges[2]])
                continue;
            if (in_cv[v.new_roles[0]] || in_cv[v.new_roles[1]] || in_cv[v.new_roles[2]])
                continue;
            int pos = position_of[g.edge_index(v.root.u, v.root.v)];
            std::vector<Edge> fresh = sort_local({v.new_edges.begin(), v.new_edges.end()});
            if (!chosen || pos < chosen_pos ||
                (pos == chosen_pos && list_less(fresh, chosen_new))) {
                chosen = &v;
                chosen_pos = pos;
                chosen_new = std::move(fresh);
            }
        }

        if (chosen) {
            log.lo.push_back(chosen_pos);
            log.regular_root_high.push_back(chosen->u1 == std::max(chosen->root.u, chosen->root.v)
                                                ? 1
                                                : 0);
            for (int rv : chosen->new_roles) append_vertex(rv);
            for (const Edge& e : chosen_new) append_edge(e);
        } else {
            // Degenerate: any copy meeting C_{i-1} in >= 1 edge but not
            // contained in it; deterministically the least new-edge list.
            const Hyperedge* pick = nullptr;
            std::vector<Edge> pick_new;
            for (const Hyperedge& he : h.hyperedges) {
                int inside = 0;
                for (int ei : he.edge_indices) inside += in_ce[ei];
                if (inside == 0 || inside == static_cast<int>(he.edge_indices.size())) continue;
                std::vector<Edge> fresh;
                for (int ei : he.edge_indices) {
                    if (!in_ce[ei]) fresh.push_back(g.edges()[ei]);
                }
                std::sort(fresh.begin(), fresh.end(), less_local);
                if (!pick || list_less(fresh, pick_new)) {
                    pick = &he;
                    pick_new = std::move(fresh);
                }
            }
            if (!pick) {
                // No copy crosses the boundary: the collage hypergraph would
                // be disconnected, which make_collage rules out.
                throw falsification_error("core extraction stuck on a connected collage");
            }
            std::vector<int> fresh_vertices;
            for (const Edge& e : pick_new) {
                if (!in_cv[e.u]) fresh_vertices.push_back(e.u);
                if (!in_cv[e.v]) fresh_vertices.push_back(e.v);
            }
            std::sort(fresh_vertices.begin(), fresh_vertices.end());
            fresh_vertices.erase(std::unique(fresh_vertices.begin(), fresh_vertices.end()),
                                 fresh_vertices.end());
            std::vector<Edge> host_new;
            for (const Edge& e : pick_new) {
                host_new.emplace_back(c.local_to_host[e.u], c.local_to_host[e.v]);
            }
            log.ld.emplace_back(step, std::move(host_new));
            ++degenerate;
            for (int v : fresh_vertices) append_vertex(v);
            for (const Edge& e : pick_new) append_edge(e);
        }
        log.snapshots.push_back({step, e_count, v_count, degenerate});
    }

    log.core = log.le;
    return log;
}

std::vector<Edge> replay_core(const CoreLog& log,
                              const std::function<bool(const Edge&, const Edge&)>& edge_less) {
    if (log.lv.size() < 2) throw invalid_argument_error("replay: seed vertices missing");
    std::function<bool(const Edge&, const Edge&)> less = edge_less;
    if (!less) less = [](const Edge& a, const Edge& b) { return a < b; };
    std::vector<Edge> le;
    std::vector<std::uint8_t> seen; // by vertex label; sized lazily
    auto mark_seen = [&](int v) {
        if (v >= static_cast<int>(seen.size())) seen.resize(v + 1, 0);
        seen[v] = 1;
    };
    auto is_seen = [&](int v) { return v < static_cast<int>(seen.size()) && seen[v]; };

    std::size_t lv_pos = 0;
    auto take_vertex = [&]() {
        if (lv_pos >= log.lv.size()) throw falsification_error("replay: vertex log exhausted");
        int v = log.lv[lv_pos++];
        mark_seen(v);
        return v;
    };

    int a = take_vertex();
    int b = take_vertex();
    le.emplace_back(a, b);

    std::size_t next_ld = 0, next_reg = 0;
    int step = 2;
    while (next_ld < log.ld.size() || next_reg < log.lo.size()) {
        if (next_ld < log.ld.size() && log.ld[next_ld].first == step) {
            std::vector<Edge> fresh = log.ld[next_ld].second;
            std::sort(fresh.begin(), fresh.end(), less);
            ++next_ld;
            std::vector<int> new_vertices;
            for (const Edge& e : fresh) {
                if (!is_seen(e.u)) new_vertices.push_back(e.u);
                if (!is_seen(e.v)) new_vertices.push_back(e.v);
            }
            std::sort(new_vertices.begin(), new_vertices.end());
            new_vertices.erase(std::unique(new_vertices.begin(), new_vertices.end()),
                               new_vertices.end());
            for (int v : new_vertices) {
                int got = take_vertex();
                if (got != v) throw falsification_error("replay: vertex log mismatch");
            }
            for (const Edge& e : fresh) le.push_back(e);
        } else {
            if (next_reg >= log.lo.size()) throw falsification_error("replay: step log mismatch");
            int pos = log.lo[next_reg];
            bool high = log.regular_root_high[next_reg] != 0;
            ++next_reg;
            if (pos < 1 || pos > static_cast<int>(le.size())) {
                throw falsification_error("replay: root position out of range");
            }
            Edge root = le[pos - 1];
            int u1 = high ? std::max(root.u, root.v) : std::min(root.u, root.v);
            int u2 = root.u + root.v - u1;
            int u3 = take_vertex();
            int w1 = take_vertex();
            int w2 = take_vertex();
            std::vector<Edge> fresh = {Edge(u1, u3), Edge(u1, w2), Edge(u2, w1),
                                       Edge(u3, w1), Edge(u3, w2)};
            std::sort(fresh.begin(), fresh.end(), less);
            for (const Edge& e : fresh) le.push_back(e);
        }
        ++step;
    }
    return le;
}

bool core_density_audit(const CoreLog& log, std::string* detail) {
    for (const CoreStepSnapshot& s : log.snapshots) {
        long long lhs = s.degenerate_count;
        long long mid = 3LL * s.edges - 5LL * s.vertices + 7;
        long long rhs = 21LL * s.degenerate_count;
        if (!(lhs <= mid && mid <= rhs)) {
            if (detail) {
                std::ostringstream os;
                os << "step " << s.step << ": d=" << lhs << " 3e-5v+7=" << mid
                   << " 21d=" << rhs;
                *detail = os.str();
            }
            return false;
        }
    }
    return true;
}

} // namespace trg
