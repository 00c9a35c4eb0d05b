#include "census.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"

namespace trg {

namespace {

std::uint64_t checked_binomial(std::uint64_t n, int k) {
    if (k < 0) return 0;
    if (static_cast<std::uint64_t>(k) > n) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - static_cast<std::uint64_t>(k) + i) / i;
        if (r > static_cast<unsigned __int128>(UINT64_MAX)) {
            throw too_large_error("binomial overflow in census count");
        }
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t count_triangles(const Graph& g) {
    std::uint64_t total = 0;
    for (const Edge& e : g.edges()) {
        auto nu = g.neighbours(e.u);
        auto nv = g.neighbours(e.v);
        // Common neighbours above v count each triangle at its lowest edge.
        auto it = std::lower_bound(nu.begin(), nu.end(), e.v + 1);
        auto jt = std::lower_bound(nv.begin(), nv.end(), e.v + 1);
        while (it != nu.end() && jt != nv.end()) {
            if (*it < *jt) ++it;
            else if (*jt < *it) ++jt;
            else { ++total; ++it; ++jt; }
        }
    }
    return total;
}

std::uint64_t count_wedges(const Graph& g) {
    std::uint64_t total = 0;
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t d = static_cast<std::uint64_t>(g.degree(v));
        total += d * (d - 1) / 2;
    }
    return total;
}

int codegree(const Graph& g, int u, int v) {
    auto nu = g.neighbours(u);
    auto nv = g.neighbours(v);
    int c = 0;
    auto it = nu.begin();
    auto jt = nv.begin();
    while (it != nu.end() && jt != nv.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else { ++c; ++it; ++jt; }
    }
    return c;
}

std::uint64_t count_c4(const Graph& g) {
    std::uint64_t total = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            std::uint64_t c = static_cast<std::uint64_t>(codegree(g, u, v));
            total += c * (c - 1) / 2;
        }
    }
    return total / 2; // each 4-cycle seen from both diagonals
}

std::uint64_t count_k2_10(const Graph& g) {
    std::uint64_t total = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            std::uint64_t prev = total;
            total += checked_binomial(static_cast<std::uint64_t>(codegree(g, u, v)), 10);
            if (total < prev) throw too_large_error("K2_10 count overflow");
        }
    }
    return total;
}

// K2_10 plus a pendant edge on one side vertex u: pendant choices are
// neighbours of u outside the chosen 10-set and distinct from v, which is
// d(u) - 10 - [uv edge] regardless of the 10-set.
std::uint64_t count_k2_10_plus(const Graph& g) {
    std::uint64_t total = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            int c = codegree(g, u, v);
            if (c < 10) continue;
            long long pendants = g.degree(u) - 10 - (g.has_edge(u, v) ? 1 : 0);
            if (pendants <= 0) continue;
            std::uint64_t prev = total;
            total += checked_binomial(static_cast<std::uint64_t>(c), 10) *
                     static_cast<std::uint64_t>(pendants);
            if (total < prev) throw too_large_error("K2_10_plus count overflow");
        }
    }
    return total;
}

// Pattern-vertex visit order: grow along pattern edges, preferring vertices
// with the most already-placed neighbours, then higher degree.
std::vector<int> matcher_order(const Graph& f) {
    int k = f.n();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int w : f.neighbours(v))
                if (placed[w]) ++back;
            if (back > best_back || (back == best_back && f.degree(v) > best_deg)) {
                best = v;
                best_back = back;
                best_deg = f.degree(v);
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct MatchContext {
    const Graph& g;
    const Graph& f;
    std::vector<int> order;
    std::vector<int> assignment;       // pattern vertex -> host vertex
    std::vector<bool> used;            // host vertex in image
    std::uint64_t embeddings = 0;
    // Copies deduplicated by their sorted host edge-index key.
    std::unordered_set<std::string> seen;
    std::vector<Copy>* out = nullptr;
    std::size_t limit = 0;

    MatchContext(const Graph& host, const Graph& pat)
        : g(host), f(pat), order(matcher_order(pat)), assignment(pat.n(), -1),
          used(host.n(), false) {}

    void record() {
        ++embeddings;
        if (!out) return;
        std::vector<int> idx;
        idx.reserve(f.edges().size());
        for (const Edge& e : f.edges()) {
            idx.push_back(g.edge_index(assignment[e.u], assignment[e.v]));
        }
        std::sort(idx.begin(), idx.end());
        std::string key(reinterpret_cast<const char*>(idx.data()), idx.size() * sizeof(int));
        if (seen.insert(std::move(key)).second) {
            out->push_back(Copy{assignment});
            if (limit && out->size() > limit) {
                throw too_large_error("copy enumeration exceeded limit");
            }
        }
    }

    void extend(int depth) {
        if (depth == static_cast<int>(order.size())) {
            record();
            return;
        }
        int pv = order[depth];
        // Anchored candidates: intersect neighbourhoods of placed neighbours.
        int anchor = -1;
        for (int w : f.neighbours(pv)) {
            if (assignment[w] >= 0 &&
                (anchor < 0 || g.degree(assignment[w]) < g.degree(assignment[anchor]))) {
                anchor = w;
            }
        }
        auto try_host = [&](int hv) {
            if (used[hv]) return;
            for (int w : f.neighbours(pv)) {
                if (assignment[w] >= 0 && !g.has_edge(hv, assignment[w])) return;
            }
            assignment[pv] = hv;
            used[hv] = true;
            extend(depth + 1);
            used[hv] = false;
            assignment[pv] = -1;
        };
        if (anchor >= 0) {
            for (int hv : g.neighbours(assignment[anchor])) try_host(hv);
        } else {
            for (int hv = 0; hv < g.n(); ++hv) try_host(hv);
        }
    }
};

void check_pattern(const Pattern& f) {
    if (f.graph.n() > kMaxPatternVertices) {
        throw too_large_error("pattern exceeds " + std::to_string(kMaxPatternVertices) +
                              " vertices");
    }
}

std::uint64_t count_embeddings(const Graph& g, const Graph& f) {
    MatchContext ctx(g, f);
    ctx.extend(0);
    return ctx.embeddings;
}

} // namespace

std::uint64_t count_copies(const Graph& g, const Pattern& f) {
    check_pattern(f);
    if (f.name == "K3") return count_triangles(g);
    if (f.name == "K12") return count_wedges(g);
    if (f.name == "C4") return count_c4(g);
    if (f.name == "K2_10") return count_k2_10(g);
    if (f.name == "K2_10_plus") return count_k2_10_plus(g);
    std::uint64_t aut = automorphism_count(f);
    return count_embeddings(g, f.graph) / aut;
}

CopyList enumerate_copies(const Graph& g, const Pattern& f, std::size_t limit) {
    check_pattern(f);
    CopyList list;
    MatchContext ctx(g, f.graph);
    ctx.out = &list.copies;
    ctx.limit = limit;
    ctx.extend(0);
    return list;
}

std::vector<int> copy_edge_indices(const Graph& g, const Pattern& f, const Copy& c) {
    std::vector<int> idx;
    idx.reserve(f.graph.edges().size());
    for (const Edge& e : f.graph.edges()) {
        int i = g.edge_index(c.map[e.u], c.map[e.v]);
        if (i < 0) throw invalid_argument_error("copy edge missing from host");
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::uint64_t automorphism_count(const Pattern& f) {
    return count_embeddings(f.graph, f.graph);
}

Rat max_subgraph_density(const Pattern& f) {
    const Graph& g = f.graph;
    int k = g.n();
    if (k > kMaxPatternVertices) throw too_large_error("pattern too large for density scan");
    Rat best(0, 1);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        int v = __builtin_popcount(mask);
        int e = 0;
        for (const Edge& edge : g.edges()) {
            if ((mask >> edge.u & 1) && (mask >> edge.v & 1)) ++e;
        }
        Rat d(e, v);
        if (best < d) best = d;
    }
    return best;
}

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : g.edges()) {
        auto nu = g.neighbours(e.u);
        auto nv = g.neighbours(e.v);
        auto it = std::lower_bound(nu.begin(), nu.end(), e.v + 1);
        auto jt = std::lower_bound(nv.begin(), nv.end(), e.v + 1);
        while (it != nu.end() && jt != nv.end()) {
            if (*it < *jt) ++it;
            else if (*jt < *it) ++jt;
            else {
                out.push_back({e.u, e.v, *it});
                ++it;
                ++jt;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 3>> greedy_edge_disjoint_triangles(
    const Graph& g, const std::optional<std::vector<int>>& restrict_to) {
    std::vector<std::uint8_t> allowed(g.n(), restrict_to ? 0 : 1);
    if (restrict_to) {
        for (int v : *restrict_to) {
            g.check_vertex(v);
            allowed[v] = 1;
        }
    }
    std::vector<std::uint8_t> edge_used(g.edges().size(), 0);
    std::vector<std::array<int, 3>> picked;
    for (const auto& t : all_triangles(g)) {
        if (!allowed[t[0]] || !allowed[t[1]] || !allowed[t[2]]) continue;
        int e1 = g.edge_index(t[0], t[1]);
        int e2 = g.edge_index(t[0], t[2]);
        int e3 = g.edge_index(t[1], t[2]);
        if (edge_used[e1] || edge_used[e2] || edge_used[e3]) continue;
        edge_used[e1] = edge_used[e2] = edge_used[e3] = 1;
        picked.push_back(t);
    }
    return picked;
}

namespace {

// Enumerate k-subsets with at least `threshold` induced edges, pruning on the
// best case for the remaining picks.
void dense_scan(const Graph& g, int k, int threshold, std::vector<int>& chosen, int next,
                int edges_so_far, std::vector<DensePairViolation>& out) {
    int have = static_cast<int>(chosen.size());
    if (have == k) {
        if (edges_so_far >= threshold) out.push_back({chosen, edges_so_far});
        return;
    }
    int remaining = k - have;
    if (g.n() - next < remaining) return;
    // Upper bound: each new vertex joins everything placed or to come.
    int bound = edges_so_far + remaining * have + remaining * (remaining - 1) / 2;
    if (bound < threshold) return;
    for (int v = next; v < g.n(); ++v) {
        int gained = 0;
        for (int u : chosen)
            if (g.has_edge(u, v)) ++gained;
        chosen.push_back(v);
        dense_scan(g, k, threshold, chosen, v + 1, edges_so_far + gained, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<DensePairViolation> dense_pair_violations(const Graph& g, int max_vertices) {
    if (g.n() > max_vertices) {
        throw too_large_error("dense pair scan refused: host exceeds vertex bound");
    }
    static constexpr std::pair<int, int> kTargets[] = {{4, 6}, {5, 7}, {8, 12}};
    std::vector<DensePairViolation> out;
    for (auto [k, threshold] : kTargets) {
        if (g.n() < k || g.m() < threshold) continue;
        std::vector<int> chosen;
        dense_scan(g, k, threshold, chosen, 0, 0, out);
    }
    return out;
}

} // namespace trg
