#include "game.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "census.hpp"
#include "collage.hpp"
#include "discharge.hpp"
#include "errors.hpp"

namespace trg {

using nlohmann::json;

StrategyVariant strategy_from_name(const std::string& name) {
    if (name == "good") return StrategyVariant::good_colouring;
    if (name == "naive") return StrategyVariant::naive_triangle_free;
    if (name == "all_blue") return StrategyVariant::all_blue_greedy;
    throw invalid_argument_error("unknown strategy: " + name);
}

std::string strategy_name(StrategyVariant v) {
    switch (v) {
        case StrategyVariant::good_colouring: return "good";
        case StrategyVariant::naive_triangle_free: return "naive";
        case StrategyVariant::all_blue_greedy: return "all_blue";
    }
    return "?";
}

namespace {

// Shared greedy rule over a fixed universe graph with a partial colouring.
// Returns the index of a vertex closing a monochromatic triangle, or -1.
int closes_colour_triangle(const Graph& g, const TwoColouring& col, int u, int v, Colour c) {
    auto nu = g.neighbours(u);
    auto nv = g.neighbours(v);
    auto it = nu.begin();
    auto jt = nv.begin();
    while (it != nu.end() && jt != nv.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else {
            int w = *it;
            auto cu = col.try_get(u, w);
            auto cv = col.try_get(v, w);
            if (cu && cv && *cu == c && *cv == c) return w;
            ++it;
            ++jt;
        }
    }
    return -1;
}

// Route one collage: discharging when its density and dense-subset conditions
// hold, otherwise backtracking search on the component.
enum class CollageRoute { discharged, searched, budget, impossible };

CollageRoute colour_one_collage(const Collage& c, const StrategySpec& strategy,
                                TwoColouring& out) {
    auto apply_local = [&](const TwoColouring& local_col) {
        const Graph& lg = local_col.graph();
        for (int e = 0; e < lg.m(); ++e) {
            const Edge& le = lg.edges()[e];
            out.set(c.local_to_host[le.u], c.local_to_host[le.v], local_col.get(e));
        }
    };

    if (all_triangles(c.local).empty()) {
        for (const Edge& he : c.host_edges) out.set(he.u, he.v, Colour::blue);
        return CollageRoute::discharged;
    }

    // Discharging needs sub-5/3 sub-collage density plus no (4,6)/(5,7)/(8,12)
    // subsets; the support bound of the well-behaved definition is not needed.
    // Collages beyond the certification size (upper-range giants) go straight
    // to the search fallback.
    constexpr int kDischargeVertexCap = 30;
    bool can_discharge = false;
    BehaviourOptions opts;
    if (c.local.n() <= kDischargeVertexCap &&
        dense_pair_violations(c.local, opts.dense_scan_vertex_cap).empty()) {
        Rat densest = densest_subgraph_density(c.local);
        if (densest < Rat(5, 3)) {
            can_discharge = true;
        } else {
            // Sufficient certificate failed; fall back to the exact
            // sub-collage scan when it is affordable.
            CollageHypergraph h = build_collage_hypergraph(c.local);
            if (static_cast<int>(h.hyperedges.size()) <= opts.exact_hyperedge_cap) {
                BehaviourReport rep = is_well_behaved(c, c.host_n, DensityMode::exact, opts);
                can_discharge = rep.density_ok == Verdict::yes;
            }
        }
    }
    if (can_discharge) {
        apply_local(very_good_colouring(c));
        return CollageRoute::discharged;
    }

    auto local = std::make_shared<Graph>(c.local);
    SearchResult res = find_triangle_free_colouring(local, strategy.search_budget,
                                                    strategy.recolour_non_triangle_blue);
    if (res.status == SearchStatus::found) {
        apply_local(*res.colouring);
        return CollageRoute::searched;
    }
    return res.status == SearchStatus::budget_exhausted ? CollageRoute::budget
                                                        : CollageRoute::impossible;
}

} // namespace

FirstRoundResult first_round_colouring(std::shared_ptr<const Graph> g,
                                       const StrategySpec& strategy, Rng* order_rng) {
    FirstRoundResult result;
    switch (strategy.variant) {
        case StrategyVariant::naive_triangle_free: {
            SearchResult res = find_triangle_free_colouring(g, strategy.search_budget,
                                                            strategy.recolour_non_triangle_blue);
            if (res.status == SearchStatus::found) {
                result.colouring = std::move(res.colouring);
                result.collages_searched = 1;
            } else {
                result.status = res.status == SearchStatus::budget_exhausted
                                    ? FirstRoundStatus::budget_exhausted
                                    : FirstRoundStatus::impossible;
            }
            return result;
        }
        case StrategyVariant::all_blue_greedy: {
            std::vector<Edge> order = g->edges();
            if (order_rng) order_rng->shuffle(order);
            TwoColouring empty(std::make_shared<Graph>(Graph::empty(g->n())));
            GreedyResult greedy = greedy_extend(empty.graph(), empty, *g, order);
            if (greedy.failure) {
                result.status = FirstRoundStatus::greedy_failure;
            } else {
                // Rebuild over g itself (the union graph equals g here).
                TwoColouring col(g);
                for (const Edge& e : g->edges()) col.set(e.u, e.v, greedy.colouring.get(e.u, e.v));
                result.colouring = std::move(col);
            }
            return result;
        }
        case StrategyVariant::good_colouring: break;
    }

    TwoColouring col(g);
    for (const Collage& c : maximal_collages(*g)) {
        ++result.collages_total;
        switch (colour_one_collage(c, strategy, col)) {
            case CollageRoute::discharged: ++result.collages_discharged; break;
            case CollageRoute::searched: ++result.collages_searched; break;
            case CollageRoute::budget:
                result.status = FirstRoundStatus::budget_exhausted;
                return result;
            case CollageRoute::impossible:
                result.status = FirstRoundStatus::impossible;
                return result;
        }
    }
    result.colouring = std::move(col);
    return result;
}

GreedyResult greedy_extend(const Graph& g1, const TwoColouring& phi1, const Graph& g2,
                           const std::vector<Edge>& order) {
    if (!phi1.complete()) throw invalid_argument_error("greedy extension needs a complete phi1");
    if (!monochromatic_triangles(phi1).empty()) {
        throw invalid_argument_error("greedy extension needs a triangle-free phi1");
    }
    auto u = std::make_shared<Graph>(graph_union(g1, g2));
    GreedyResult result{TwoColouring(u), std::nullopt, 0};
    TwoColouring& col = result.colouring;
    for (const Edge& e : g1.edges()) col.set(e.u, e.v, phi1.get(e.u, e.v));

    for (const Edge& e : order) {
        if (g1.has_edge(e.u, e.v)) {
            throw invalid_argument_error("arrival order contains a round-one edge");
        }
        if (closes_colour_triangle(*u, col, e.u, e.v, Colour::blue) < 0) {
            col.set(e.u, e.v, Colour::blue);
        } else {
            int w = closes_colour_triangle(*u, col, e.u, e.v, Colour::red);
            col.set(e.u, e.v, Colour::red);
            if (w >= 0) {
                std::array<int, 3> tri = {e.u, e.v, w};
                std::sort(tri.begin(), tri.end());
                result.failure = GreedyFailure{e, tri};
                return result;
            }
        }
        ++result.coloured;
    }
    return result;
}

GameTranscript two_round_game(int n, double p, double q, const StrategySpec& strategy,
                              RngSpec rng, ArrivalMode arrival, bool collect_stats) {
    GameTranscript t;
    t.n = n;
    t.p = p;
    t.q = q;
    t.strategy = strategy;
    t.rng = rng;
    t.arrival = arrival;
    t.collect_stats = collect_stats;

    Rng r1(rng, kRngTagGraph1), r2(rng, kRngTagGraph2), ro(rng, kRngTagArrival);
    auto g1 = std::make_shared<Graph>(sample_gnp_with(n, p, r1));
    Graph g2 = sample_gnp_with(n, q, r2);
    t.g1_edges = g1->edges();
    t.g2_edges = g2.edges();

    FirstRoundResult round1 = first_round_colouring(g1, strategy, &ro);
    t.first_round_status = round1.status;
    if (round1.status != FirstRoundStatus::ok) {
        t.outcome = GameOutcome::first_round_failure;
        return t;
    }
    const TwoColouring& phi1 = *round1.colouring;
    t.phi1 = write_colouring(phi1);
    if (collect_stats) {
        t.stats.crrbb = count_crrbb(phi1);
        t.stats.crbbbb = count_crbbbb(phi1);
        t.stats.dangerous_pair_count = dangerous_pairs(phi1).edges.size();
        t.stats.dangerous_k12_count = dangerous_k12(phi1).size();
    }

    std::vector<Edge> fresh;
    for (const Edge& e : g2.edges()) {
        if (!g1->has_edge(e.u, e.v)) fresh.push_back(e);
    }
    if (arrival == ArrivalMode::random) ro.shuffle(fresh);
    t.arrival_order = fresh;

    GreedyResult greedy = greedy_extend(*g1, phi1, g2, fresh);
    for (int i = 0; i < greedy.coloured; ++i) {
        const Edge& e = fresh[static_cast<std::size_t>(i)];
        t.decisions.emplace_back(e, greedy.colouring.get(e.u, e.v));
    }
    if (greedy.failure) {
        const Edge& e = greedy.failure->edge;
        t.decisions.emplace_back(e, Colour::red);
        t.outcome = GameOutcome::extension_failure;
        t.failure = greedy.failure;
    } else {
        t.outcome = GameOutcome::success;
    }
    return t;
}

OnlineResult online_game(int n, long long edge_budget, RngSpec rng) {
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    if (edge_budget < 0 || edge_budget > all) {
        throw invalid_argument_error("edge budget outside [0, C(n,2)]");
    }
    std::vector<Edge> deck;
    deck.reserve(static_cast<std::size_t>(all));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) deck.emplace_back(u, v);
    Rng r(rng, kRngTagArrival);
    r.shuffle(deck);

    // Dense colour matrix; 2 = absent.
    std::vector<std::uint8_t> colour(static_cast<std::size_t>(n) * n, 2);
    auto at = [&](int a, int b) -> std::uint8_t& {
        return colour[static_cast<std::size_t>(a) * n + b];
    };
    std::vector<std::vector<int>> coloured_neighbours(n);

    OnlineResult res;
    for (long long i = 0; i < edge_budget; ++i) {
        const Edge e = deck[static_cast<std::size_t>(i)];
        res.edges_played = static_cast<int>(i + 1);
        int mono_apex = -1;
        bool blue_blocked = false;
        const auto& small = coloured_neighbours[e.u].size() <= coloured_neighbours[e.v].size()
                                ? coloured_neighbours[e.u]
                                : coloured_neighbours[e.v];
        int other = &small == &coloured_neighbours[e.u] ? e.v : e.u;
        int self = other == e.v ? e.u : e.v;
        for (int w : small) {
            std::uint8_t cw = at(other, w);
            if (cw == 2) continue;
            if (cw == at(self, w)) {
                if (cw == 1) blue_blocked = true;
            }
        }
        std::uint8_t chosen = blue_blocked ? 0 : 1;
        if (chosen == 0) {
            for (int w : small) {
                if (at(other, w) == 0 && at(self, w) == 0) {
                    mono_apex = w;
                    break;
                }
            }
        }
        at(e.u, e.v) = chosen;
        at(e.v, e.u) = chosen;
        coloured_neighbours[e.u].push_back(e.v);
        coloured_neighbours[e.v].push_back(e.u);
        if (chosen == 0 && mono_apex >= 0) {
            res.failed = true;
            res.failure_index = static_cast<int>(i + 1);
            res.failing_edge = e;
            std::array<int, 3> tri = {e.u, e.v, mono_apex};
            std::sort(tri.begin(), tri.end());
            res.red_triangle = tri;
            return res;
        }
    }
    return res;
}

// --- transcript json ---------------------------------------------------

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v});
    return arr;
}

std::string outcome_name(GameOutcome o) {
    switch (o) {
        case GameOutcome::success: return "success";
        case GameOutcome::extension_failure: return "extension_failure";
        case GameOutcome::first_round_failure: return "first_round_failure";
    }
    return "?";
}

std::string round1_status_name(FirstRoundStatus s) {
    switch (s) {
        case FirstRoundStatus::ok: return "ok";
        case FirstRoundStatus::budget_exhausted: return "budget_exhausted";
        case FirstRoundStatus::impossible: return "impossible";
        case FirstRoundStatus::greedy_failure: return "greedy_failure";
    }
    return "?";
}

} // namespace

std::string transcript_to_json(const GameTranscript& t) {
    json j;
    j["n"] = t.n;
    j["p"] = t.p;
    j["q"] = t.q;
    j["strategy"] = strategy_name(t.strategy.variant);
    j["search_budget"] = t.strategy.search_budget;
    j["recolour_non_triangle_blue"] = t.strategy.recolour_non_triangle_blue;
    j["master_seed"] = t.rng.master_seed;
    j["stream_id"] = t.rng.stream_id;
    j["arrival"] = t.arrival == ArrivalMode::random ? "random" : "lex";
    j["collect_stats"] = t.collect_stats;
    j["g1"] = edges_to_json(t.g1_edges);
    j["g2"] = edges_to_json(t.g2_edges);
    j["arrival_order"] = edges_to_json(t.arrival_order);
    json decisions = json::array();
    for (const auto& [e, c] : t.decisions) {
        decisions.push_back({e.u, e.v, std::string(1, colour_char(c))});
    }
    j["decisions"] = decisions;
    j["phi1"] = t.phi1;
    j["outcome"] = outcome_name(t.outcome);
    j["first_round_status"] = round1_status_name(t.first_round_status);
    if (t.failure) {
        j["failure"] = {{"edge", {t.failure->edge.u, t.failure->edge.v}},
                        {"red_triangle", t.failure->red_triangle}};
    }
    j["stats"] = {{"crrbb", t.stats.crrbb},
                  {"crbbbb", t.stats.crbbbb},
                  {"dangerous_pairs", t.stats.dangerous_pair_count},
                  {"dangerous_k12", t.stats.dangerous_k12_count}};
    return j.dump(2);
}

ReplayReport replay_transcript(const std::string& json_text) {
    ReplayReport rep;
    json j = json::parse(json_text);
    StrategySpec strategy;
    strategy.variant = strategy_from_name(j.at("strategy").get<std::string>());
    strategy.search_budget = j.at("search_budget").get<long long>();
    strategy.recolour_non_triangle_blue = j.at("recolour_non_triangle_blue").get<bool>();
    RngSpec rng{j.at("master_seed").get<std::uint64_t>(), j.at("stream_id").get<std::uint64_t>()};
    ArrivalMode arrival = j.at("arrival").get<std::string>() == "lex" ? ArrivalMode::lexicographic
                                                                      : ArrivalMode::random;
    GameTranscript fresh = two_round_game(j.at("n").get<int>(), j.at("p").get<double>(),
                                          j.at("q").get<double>(), strategy, rng, arrival,
                                          j.value("collect_stats", true));
    std::string replayed = transcript_to_json(fresh);
    if (json::parse(replayed) != j) {
        rep.detail = "replayed transcript differs from the stored record";
        return rep;
    }
    // Witness validity: the failing edge must close a red triangle whose two
    // prior edges really are red in the replayed record.
    if (fresh.failure) {
        const auto& f = *fresh.failure;
        auto g1 = Graph::from_edges(fresh.n, fresh.g1_edges);
        auto g2 = Graph::from_edges(fresh.n, fresh.g2_edges);
        auto u = std::make_shared<Graph>(graph_union(g1, g2));
        TwoColouring col(u);
        for (const auto& [e, c] : fresh.decisions) col.set(e.u, e.v, c);
        TwoColouring phi1 = read_colouring(u, fresh.phi1);
        for (const Edge& e : g1.edges()) col.set(e.u, e.v, phi1.get(e.u, e.v));
        const auto& tri = f.red_triangle;
        bool covers_edge = false;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Edge te(tri[a], tri[b]);
                if (te == f.edge) covers_edge = true;
                if (col.try_get(te.u, te.v) != Colour::red) {
                    rep.detail = "failure witness is not a red triangle";
                    return rep;
                }
            }
        if (!covers_edge) {
            rep.detail = "failure witness does not contain the failing edge";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace trg
