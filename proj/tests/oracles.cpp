#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace trg::oracle {

namespace {

// All k-subsets of 0..n-1.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

std::uint64_t count_copies(const Graph& g, const Pattern& f) {
    const int k = f.graph.n();
    if (g.n() < k) return 0;
    std::set<std::vector<Edge>> images;
    for_each_subset(g.n(), k, [&](const std::vector<int>& subset) {
        std::vector<int> perm = subset;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (const Edge& pe : f.graph.edges()) {
                if (!g.has_edge(perm[pe.u], perm[pe.v])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                std::vector<Edge> image;
                for (const Edge& pe : f.graph.edges()) image.emplace_back(perm[pe.u], perm[pe.v]);
                std::sort(image.begin(), image.end());
                images.insert(image);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return images.size();
}

std::uint64_t count_mono_triangles(const TwoColouring& col) {
    const Graph& g = col.graph();
    std::uint64_t count = 0;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c) {
                if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                if (col.get(a, b) == col.get(a, c) && col.get(a, b) == col.get(b, c)) ++count;
            }
    return count;
}

std::uint64_t count_crrbb(const TwoColouring& col) {
    const Graph& g = col.graph();
    std::uint64_t count = 0;
    // Ordered apex pair (w = red apex, x = blue apex), unordered {u,v}.
    for (int w = 0; w < g.n(); ++w)
        for (int x = 0; x < g.n(); ++x) {
            if (w == x) continue;
            for (int u = 0; u < g.n(); ++u) {
                if (u == w || u == x) continue;
                for (int v = u + 1; v < g.n(); ++v) {
                    if (v == w || v == x) continue;
                    if (!g.has_edge(w, u) || !g.has_edge(w, v) || !g.has_edge(x, u) ||
                        !g.has_edge(x, v))
                        continue;
                    if (col.get(w, u) == Colour::red && col.get(w, v) == Colour::red &&
                        col.get(x, u) == Colour::blue && col.get(x, v) == Colour::blue)
                        ++count;
                }
            }
        }
    return count;
}

std::uint64_t count_crbbbb(const TwoColouring& col) {
    const Graph& g = col.graph();
    // 5-cycles as sorted edge sets with exactly one red edge.
    std::set<std::vector<int>> seen;
    std::vector<int> vs(5);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == 5) {
            std::vector<int> perm = vs;
            do {
                bool cycle = true;
                for (int i = 0; i < 5; ++i) {
                    if (!g.has_edge(perm[i], perm[(i + 1) % 5])) {
                        cycle = false;
                        break;
                    }
                }
                if (cycle) {
                    int reds = 0;
                    std::vector<int> key;
                    for (int i = 0; i < 5; ++i) {
                        int e = g.edge_index(perm[i], perm[(i + 1) % 5]);
                        key.push_back(e);
                        if (col.get(e) == Colour::red) ++reds;
                    }
                    std::sort(key.begin(), key.end());
                    key.erase(std::unique(key.begin(), key.end()), key.end());
                    if (key.size() == 5 && reds == 1) seen.insert(key);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = start; v < g.n(); ++v) {
            vs[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return seen.size();
}

std::set<std::pair<int, int>> dangerous_pairs(const TwoColouring& col, bool include_graph_edges) {
    const Graph& g = col.graph();
    std::set<std::pair<int, int>> out;
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
            if (!include_graph_edges && g.has_edge(x, y)) continue;
            bool red = false, blue = false;
            for (int w = 0; w < g.n(); ++w) {
                if (w == x || w == y) continue;
                if (!g.has_edge(w, x) || !g.has_edge(w, y)) continue;
                if (col.get(w, x) == Colour::red && col.get(w, y) == Colour::red) red = true;
                if (col.get(w, x) == Colour::blue && col.get(w, y) == Colour::blue) blue = true;
            }
            if (red && blue) out.insert({x, y});
        }
    return out;
}

std::set<std::array<int, 3>> dangerous_k12(const TwoColouring& col) {
    const Graph& g = col.graph();
    const int n = g.n();
    std::set<std::array<int, 3>> out;
    auto blue = [&](int a, int b) {
        return g.has_edge(a, b) && col.get(a, b) == Colour::blue;
    };
    for (int w = 0; w < n; ++w)
        for (int u1 = 0; u1 < n; ++u1)
            for (int u2 = u1 + 1; u2 < n; ++u2) {
                if (u1 == w || u2 == w) continue;
                if (g.has_edge(w, u1) || g.has_edge(w, u2)) continue;
                if (!g.has_edge(u1, u2) || col.get(u1, u2) != Colour::red) continue;
                bool found = false;
                for (int w1 = 0; w1 < n && !found; ++w1) {
                    if (w1 == w || w1 == u1 || w1 == u2) continue;
                    if (!blue(u1, w1) || !blue(w1, w)) continue;
                    for (int w2 = 0; w2 < n; ++w2) {
                        if (w2 == w || w2 == u1 || w2 == u2 || w2 == w1) continue;
                        if (blue(w, w2) && blue(w2, u2)) {
                            found = true;
                            break;
                        }
                    }
                }
                if (found) out.insert({w, u1, u2});
            }
    return out;
}

namespace {

void max_packing_rec(const std::vector<std::array<int, 3>>& tris, const Graph& g,
                     std::vector<std::uint8_t>& used, std::size_t start, int depth, int& best) {
    best = std::max(best, depth);
    for (std::size_t i = start; i < tris.size(); ++i) {
        int e1 = g.edge_index(tris[i][0], tris[i][1]);
        int e2 = g.edge_index(tris[i][0], tris[i][2]);
        int e3 = g.edge_index(tris[i][1], tris[i][2]);
        if (used[e1] || used[e2] || used[e3]) continue;
        used[e1] = used[e2] = used[e3] = 1;
        max_packing_rec(tris, g, used, i + 1, depth + 1, best);
        used[e1] = used[e2] = used[e3] = 0;
    }
}

} // namespace

int max_edge_disjoint_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
                    tris.push_back({a, b, c});
    std::vector<std::uint8_t> used(g.edges().size(), 0);
    int best = 0;
    max_packing_rec(tris, g, used, 0, 0, best);
    return best;
}

bool is_k3_ramsey(const Graph& g) {
    const int m = g.m();
    if (m > 25) throw std::runtime_error("oracle K3-Ramsey scan limited to 25 edges");
    auto gp = std::make_shared<Graph>(g);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        TwoColouring col(gp);
        for (int e = 0; e < m; ++e) {
            col.set(e, (mask >> e & 1) ? Colour::red : Colour::blue);
        }
        if (count_mono_triangles(col) == 0) return false;
    }
    return true;
}

std::vector<std::array<int, 4>> four_cycles(const Graph& g) {
    std::set<std::array<int, 4>> seen;
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b)
            for (int c = 0; c < g.n(); ++c)
                for (int d = 0; d < g.n(); ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) ||
                        !g.has_edge(d, a))
                        continue;
                    std::array<int, 4> key = {g.edge_index(a, b), g.edge_index(b, c),
                                              g.edge_index(c, d), g.edge_index(d, a)};
                    std::sort(key.begin(), key.end());
                    seen.insert(key);
                }
    return {seen.begin(), seen.end()};
}

PairCensus janson_pairs(const EdgeSubset& s) {
    const int n = s.n;
    // Brute-force family: wedge (x;{u1,u2}) joins the family if some apex
    // w != x has wu1, wu2 in S and all four vertices are distinct.
    std::vector<Wedge> family;
    for (int x = 0; x < n; ++x)
        for (int u1 = 0; u1 < n; ++u1)
            for (int u2 = u1 + 1; u2 < n; ++u2) {
                if (x == u1 || x == u2) continue;
                bool witnessed = false;
                for (int w = 0; w < n && !witnessed; ++w) {
                    if (w == x || w == u1 || w == u2) continue;
                    if (s.contains(w, u1) && s.contains(w, u2)) witnessed = true;
                }
                if (witnessed) family.push_back({x, u1, u2});
            }
    PairCensus out;
    out.family_size = family.size();
    auto edges_of = [](const Wedge& w) {
        return std::array<Edge, 2>{Edge(w.apex, w.u1), Edge(w.apex, w.u2)};
    };
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            auto ei = edges_of(family[i]);
            auto ej = edges_of(family[j]);
            std::set<Edge> uni(ei.begin(), ei.end());
            uni.insert(ej.begin(), ej.end());
            if (uni.size() == 4) continue; // disjoint or... check shared edge
            bool share = false;
            for (const Edge& a : ei)
                for (const Edge& b : ej)
                    if (a == b) share = true;
            if (!share) continue;
            std::set<int> verts;
            for (const Edge& e : uni) {
                verts.insert(e.u);
                verts.insert(e.v);
            }
            if (uni.size() != 3) continue; // identical wedges excluded by i != j
            if (verts.size() == 3) ++out.triangle_pairs;
            else if (family[i].apex == family[j].apex) ++out.star_pairs;
            else ++out.path_pairs;
        }
    return out;
}

TwoColouring random_colouring(std::shared_ptr<const Graph> g, Rng& rng) {
    TwoColouring col(g);
    for (int e = 0; e < g->m(); ++e) {
        col.set(e, rng.next_u64() & 1 ? Colour::blue : Colour::red);
    }
    return col;
}

} // namespace trg::oracle
