#include "density.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "errors.hpp"

namespace trg {

namespace {

std::vector<int> degrees(const EdgeSubset& s) {
    std::vector<int> d(s.n, 0);
    for (const Edge& e : s.edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::vector<std::vector<int>> adjacency(const EdgeSubset& s) {
    std::vector<std::vector<int>> adj(s.n);
    for (const Edge& e : s.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

} // namespace

std::uint64_t x2_count(const EdgeSubset& s) {
    std::uint64_t total = 0;
    for (int d : degrees(s)) {
        std::uint64_t dd = static_cast<std::uint64_t>(d);
        total += dd * (dd - 1) / 2;
    }
    return total;
}

EdgeSubset pi_set(const EdgeSubset& s) {
    auto adj = adjacency(s);
    std::vector<Edge> pairs;
    for (int apex = 0; apex < s.n; ++apex) {
        const auto& nb = adj[apex];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) pairs.emplace_back(nb[i], nb[j]);
    }
    return EdgeSubset::from_edges(s.n, std::move(pairs));
}

std::vector<Wedge> xs_family(const EdgeSubset& s, const std::optional<EdgeSubset>& exclude,
                             std::size_t cap) {
    auto adj = adjacency(s);
    // Witness apexes per pair of Pi(S).
    std::unordered_map<std::uint64_t, std::vector<int>> witnesses;
    auto key = [&](int a, int b) {
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(s.n) +
               static_cast<std::uint64_t>(b);
    };
    for (int apex = 0; apex < s.n; ++apex) {
        const auto& nb = adj[apex];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                witnesses[key(nb[i], nb[j])].push_back(apex);
    }
    std::vector<Wedge> family;
    for (const auto& [k, apexes] : witnesses) {
        int u1 = static_cast<int>(k / static_cast<std::uint64_t>(s.n));
        int u2 = static_cast<int>(k % static_cast<std::uint64_t>(s.n));
        for (int x = 0; x < s.n; ++x) {
            if (x == u1 || x == u2) continue;
            // The 4-cycle u1-w-u2-x needs a witness apex w distinct from x.
            if (apexes.size() == 1 && apexes[0] == x) continue;
            if (exclude && (exclude->contains(x, u1) || exclude->contains(x, u2))) continue;
            family.push_back({x, u1, u2});
            if (cap && family.size() > cap) {
                throw too_large_error("wedge family exceeds cap");
            }
        }
    }
    std::sort(family.begin(), family.end());
    return family;
}

DensityReport janson_params(const EdgeSubset& s, double p, std::size_t family_cap) {
    if (!(p > 0.0 && p < 1.0)) throw invalid_argument_error("p must lie in (0,1)");
    DensityReport rep;
    rep.n = s.n;
    rep.p = p;
    rep.x2 = x2_count(s);
    rep.pi_size = pi_set(s).edges.size();

    std::vector<Wedge> family = xs_family(s, std::nullopt, family_cap);
    rep.xs_size = family.size();

    // Overlapping pairs share exactly one edge; classify by the third
    // vertices on each side of the shared edge.  Same apex: union K_{1,3};
    // apexes at both ends: 3-path, or triangle when the far vertices agree.
    struct SideLists {
        std::vector<int> from_lo; // wedge apex = lo endpoint; value = other leaf
        std::vector<int> from_hi;
    };
    std::unordered_map<std::uint64_t, SideLists> edge_map;
    auto ekey = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(s.n) +
               static_cast<std::uint64_t>(b);
    };
    for (const Wedge& w : family) {
        for (int leaf : {w.u1, w.u2}) {
            int other = leaf == w.u1 ? w.u2 : w.u1;
            auto& lists = edge_map[ekey(w.apex, leaf)];
            if (w.apex < leaf) lists.from_lo.push_back(other);
            else lists.from_hi.push_back(other);
        }
    }
    std::uint64_t star_pairs = 0, path_pairs = 0, triangle_pairs = 0;
    for (auto& [k, lists] : edge_map) {
        std::uint64_t a = lists.from_lo.size(), b = lists.from_hi.size();
        star_pairs += a * (a - 1) + b * (b - 1); // ordered, same apex
        std::sort(lists.from_lo.begin(), lists.from_lo.end());
        std::sort(lists.from_hi.begin(), lists.from_hi.end());
        std::uint64_t common = 0;
        auto it = lists.from_lo.begin();
        auto jt = lists.from_hi.begin();
        while (it != lists.from_lo.end() && jt != lists.from_hi.end()) {
            if (*it < *jt) ++it;
            else if (*jt < *it) ++jt;
            else { ++common; ++it; ++jt; }
        }
        path_pairs += 2 * (a * b - common);
        triangle_pairs += 2 * common;
    }
    rep.pair_path_count = path_pairs;
    rep.pair_star_count = star_pairs;
    rep.pair_triangle_count = triangle_pairs;

    const double p2 = p * p, p3 = p2 * p;
    rep.mu = static_cast<double>(rep.xs_size) * p2;
    rep.delta1 = static_cast<double>(path_pairs) * p3;
    rep.delta2 = static_cast<double>(star_pairs) * p3;
    rep.delta_total = rep.delta1 + rep.delta2 + rep.mu;
    return rep;
}

std::optional<EdgeSubset> peel_bounded_degree(const EdgeSubset& t, double p, double c) {
    if (c <= 0) throw invalid_argument_error("peeling constant must be positive");
    if (t.edges.empty()) throw invalid_argument_error("peeling needs at least one edge");
    const double n = static_cast<double>(t.n);
    const double log_n2p = std::log(n * n * p);
    if (!(n * n * p > static_cast<double>(t.edges.size()))) {
        throw invalid_argument_error("peeling needs n^2 p > e(T)");
    }

    std::vector<std::vector<int>> adj(t.n);
    for (const Edge& e : t.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<std::uint8_t> removed(t.n, 0);
    std::vector<int> deg(t.n, 0);
    long long edge_count = static_cast<long long>(t.edges.size());
    for (int v = 0; v < t.n; ++v) deg[v] = static_cast<int>(adj[v].size());

    int removals = 0;
    const int max_removals = t.n / 2;
    while (true) {
        if (edge_count == 0) break;
        int max_deg = 0, victim = -1;
        for (int v = 0; v < t.n; ++v) {
            if (!removed[v] && deg[v] > max_deg) {
                max_deg = deg[v];
                victim = v;
            }
        }
        double bound = c * n * p / (log_n2p - std::log(static_cast<double>(edge_count)));
        if (static_cast<double>(max_deg) <= bound) break;
        if (removals >= max_removals) return std::nullopt;
        removed[victim] = 1;
        ++removals;
        for (int u : adj[victim]) {
            if (!removed[u]) {
                --deg[u];
                --edge_count;
            }
        }
        deg[victim] = 0;
    }
    std::vector<Edge> kept;
    for (const Edge& e : t.edges) {
        if (!removed[e.u] && !removed[e.v]) kept.push_back(e);
    }
    return EdgeSubset::from_edges(t.n, std::move(kept));
}

ThresholdReport completion_threshold(double n, double p, const ThresholdOptions& opts) {
    if (!(n >= 3)) throw invalid_argument_error("threshold needs n >= 3");
    if (!(p > 0 && p < 1)) throw invalid_argument_error("threshold needs p in (0,1)");
    ThresholdReport rep{ThresholdFlag::upper, std::nullopt, std::pow(n, -6.0) * std::pow(p, -8.0),
                        std::pow(n, -3.0) * std::pow(p, -3.5)};
    const double ramsey = opts.zero_constant * std::pow(n, -0.5);
    const double centre = std::pow(n, -0.6);
    const double floor_p = std::pow(n, -2.0 / 3.0);
    if (p >= ramsey) {
        rep.flag = ThresholdFlag::zero;
        rep.value = 0.0;
    } else if (p <= floor_p) {
        rep.flag = ThresholdFlag::below_range;
    } else if (p >= centre / opts.critical_window_factor &&
               p <= centre * opts.critical_window_factor) {
        rep.flag = ThresholdFlag::critical_window;
    } else if (p > centre) {
        rep.flag = ThresholdFlag::upper;
        rep.value = rep.upper_value;
    } else {
        rep.flag = ThresholdFlag::lower;
        rep.value = rep.lower_value;
    }
    return rep;
}

} // namespace trg
