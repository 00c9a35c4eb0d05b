#include "doctest.h"

#include <cmath>
#include <memory>
#include <set>

#include "census.hpp"
#include "game.hpp"
#include "oracles.hpp"
#include "patterns.hpp"

using namespace trg;

namespace {

std::shared_ptr<const Graph> shared(Graph g) { return std::make_shared<Graph>(std::move(g)); }

} // namespace

TEST_CASE("first round on trivial inputs") {
    auto tf = shared(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));
    for (const char* name : {"good", "naive", "all_blue"}) {
        StrategySpec s;
        s.variant = strategy_from_name(name);
        Rng rng(RngSpec{900, 0});
        FirstRoundResult r = first_round_colouring(tf, s, &rng);
        REQUIRE(r.status == FirstRoundStatus::ok);
        CHECK(r.colouring->count(Colour::blue) == 3);
    }
}

TEST_CASE("good colouring on a triangle plus F0_minus") {
    // Disjoint union: both parts route through the discharging colourer.
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (const Edge& e : pattern("F0_minus").graph.edges()) {
        edges.emplace_back(e.u + 3, e.v + 3);
    }
    auto g = shared(Graph::from_edges(9, edges));
    StrategySpec s;
    FirstRoundResult r = first_round_colouring(g, s);
    REQUIRE(r.status == FirstRoundStatus::ok);
    CHECK(r.collages_total == 2);
    CHECK(r.collages_discharged == 2);
    GoodnessReport rep = is_t_good(*r.colouring, 1);
    CHECK(rep.good);
}

TEST_CASE("good colouring beats an adversarial triangle-free colouring on crrbb") {
    // Paired comparison on the same graphs; no fixed threshold asserted.  At
    // this scale one giant collage usually routes through the search
    // fallback, so zero crrbb is not expected, only conditions (1)+(2) and
    // doing no worse than the plain search.
    std::uint64_t good_total = 0, naive_total = 0;
    for (int seed = 0; seed < 10; ++seed) {
        int n = 150;
        auto g = shared(sample_gnp(n, std::pow(n, -0.62), RngSpec{901, (std::uint64_t)seed}));
        StrategySpec good;
        FirstRoundResult rg = first_round_colouring(g, good);
        REQUIRE(rg.status == FirstRoundStatus::ok);
        CHECK(is_t_good(*rg.colouring, UINT64_MAX).good); // (1) + (2) hold
        good_total += count_crrbb(*rg.colouring);

        StrategySpec naive;
        naive.variant = StrategyVariant::naive_triangle_free;
        FirstRoundResult rn = first_round_colouring(g, naive);
        REQUIRE(rn.status == FirstRoundStatus::ok);
        naive_total += count_crrbb(*rn.colouring);
    }
    CHECK(good_total <= naive_total);
}

TEST_CASE("good colouring is very good when all collages discharge") {
    // Sparser boards decompose into certifiable collages only.
    int very_good = 0, rounds = 0;
    for (int seed = 0; seed < 10; ++seed) {
        int n = 80;
        auto g = shared(sample_gnp(n, std::pow(n, -0.75), RngSpec{910, (std::uint64_t)seed}));
        StrategySpec good;
        FirstRoundResult rg = first_round_colouring(g, good);
        REQUIRE(rg.status == FirstRoundStatus::ok);
        ++rounds;
        if (rg.collages_searched == 0) {
            CHECK(is_t_good(*rg.colouring, 1).good);
            ++very_good;
        }
    }
    CHECK(rounds == 10);
    CHECK(very_good >= 8); // nearly every sparse board discharges fully
}

TEST_CASE("greedy extension basics") {
    // One new edge closing no triangle: blue, success.
    auto g1 = shared(Graph::from_edges(4, {{0, 1}}));
    TwoColouring phi1(g1);
    phi1.fill(Colour::blue);
    Graph g2 = Graph::from_edges(4, {{2, 3}});
    GreedyResult r = greedy_extend(*g1, phi1, g2, {{2, 3}});
    CHECK_FALSE(r.failure.has_value());
    CHECK(r.colouring.get(2, 3) == Colour::blue);

    // The colour-splitting diagonal of a crrbb fails immediately.
    auto host = shared(Graph::from_edges(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}}));
    TwoColouring split(host);
    split.set(0, 2, Colour::red);
    split.set(1, 2, Colour::red);
    split.set(0, 3, Colour::blue);
    split.set(1, 3, Colour::blue);
    Graph add = Graph::from_edges(4, {{0, 1}});
    GreedyResult rf = greedy_extend(*host, split, add, {{0, 1}});
    REQUIRE(rf.failure.has_value());
    CHECK(rf.failure->edge == Edge(0, 1));
    std::array<int, 3> expect_tri = {0, 1, 2};
    CHECK(rf.failure->red_triangle == expect_tri);
}

TEST_CASE("greedy prefix never holds a blue triangle") {
    for (int seed = 0; seed < 8; ++seed) {
        GameTranscript t = two_round_game(40, 0.12, 0.05, StrategySpec{},
                                          RngSpec{902, static_cast<std::uint64_t>(seed)});
        if (t.outcome == GameOutcome::first_round_failure) continue;
        auto g1 = Graph::from_edges(t.n, t.g1_edges);
        auto g2 = Graph::from_edges(t.n, t.g2_edges);
        auto u = shared(graph_union(g1, g2));
        TwoColouring col(u);
        TwoColouring phi1 = read_colouring(u, t.phi1);
        for (const Edge& e : g1.edges()) col.set(e.u, e.v, phi1.get(e.u, e.v));
        for (const auto& [e, c] : t.decisions) {
            col.set(e.u, e.v, c);
            // After each step: no blue triangle through e.
            if (c == Colour::blue) {
                for (int w = 0; w < t.n; ++w) {
                    if (w == e.u || w == e.v) continue;
                    auto cu = col.try_get(e.u, w);
                    auto cv = col.try_get(e.v, w);
                    CHECK_FALSE((cu && cv && *cu == Colour::blue && *cv == Colour::blue));
                }
            }
        }
        if (t.outcome == GameOutcome::extension_failure) {
            REQUIRE(t.failure.has_value());
            const auto& tri = t.failure->red_triangle;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    CHECK(col.try_get(tri[a], tri[b]) == Colour::red);
                }
        }
    }
}

TEST_CASE("two-round game trivial regimes") {
    // q = 0: success whenever round one succeeds.
    GameTranscript t0 = two_round_game(30, 0.1, 0.0, StrategySpec{}, RngSpec{903, 0});
    CHECK(t0.outcome == GameOutcome::success);
    CHECK(t0.arrival_order.empty());

    // p = 0: greedy plays alone; failures require dense structure in g2.
    GameTranscript tp = two_round_game(25, 0.0, 0.15, StrategySpec{}, RngSpec{903, 1});
    CHECK(tp.g1_edges.empty());
    CHECK(tp.outcome == GameOutcome::success);
}

TEST_CASE("transcripts are deterministic and replayable") {
    StrategySpec s;
    GameTranscript a = two_round_game(60, 0.08, 0.01, s, RngSpec{904, 5});
    GameTranscript b = two_round_game(60, 0.08, 0.01, s, RngSpec{904, 5});
    CHECK(transcript_to_json(a) == transcript_to_json(b));
    GameTranscript c = two_round_game(60, 0.08, 0.01, s, RngSpec{904, 6});
    CHECK(transcript_to_json(a) != transcript_to_json(c));

    ReplayReport rep = replay_transcript(transcript_to_json(a));
    CHECK(rep.ok);

    // Tampering is detected: a different stream replays to a different game.
    std::string tampered = transcript_to_json(a);
    auto pos = tampered.find("\"stream_id\": 5");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 14, "\"stream_id\": 6");
    ReplayReport bad = replay_transcript(tampered);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("online game exhausts K4 orders without early failure") {
    // All 6! reveal orders of K4: greedy only ever fails on the final edge,
    // when the K4 is complete.
    std::vector<Edge> edges = Graph::complete(4).edges();
    std::sort(edges.begin(), edges.end());
    int failures = 0;
    do {
        // Drive the greedy rule directly through greedy_extend on an empty
        // start with this explicit order.
        auto empty = shared(Graph::empty(4));
        TwoColouring none(empty);
        GreedyResult r = greedy_extend(*empty, none, Graph::complete(4), edges);
        if (r.failure) {
            ++failures;
            CHECK(r.coloured == 5); // failure only at the sixth edge
        }
    } while (std::next_permutation(edges.begin(), edges.end()));
    CHECK(failures > 0);
}

TEST_CASE("online failures coincide with F0 or K4 appearing") {
    for (int seed = 0; seed < 120; ++seed) {
        OnlineResult r = online_game(12, 40, RngSpec{905, static_cast<std::uint64_t>(seed)});
        if (!r.failed) continue;
        // Rebuild the revealed prefix and census it.
        std::vector<Edge> deck;
        for (int u = 0; u < 12; ++u)
            for (int v = u + 1; v < 12; ++v) deck.emplace_back(u, v);
        Rng rng(RngSpec{905, static_cast<std::uint64_t>(seed)}, kRngTagArrival);
        rng.shuffle(deck);
        std::vector<Edge> prefix(deck.begin(), deck.begin() + r.failure_index);
        Graph g = Graph::from_edges(12, prefix);
        bool has_k4 = count_copies(g, pattern("K4")) > 0;
        bool has_f0 = count_copies(g, pattern("F0")) > 0;
        CHECK((has_k4 || has_f0));
    }

    // M = 1 always survives.
    OnlineResult one = online_game(10, 1, RngSpec{906, 0});
    CHECK_FALSE(one.failed);
    CHECK(one.edges_played == 1);
}

TEST_CASE("online survival grows superlinearly with n") {
    // Median survival over n in {100, 200, 400}: the log-log slope should sit
    // comfortably above 1 (the expected scaling is n^{4/3}); qualitative, no
    // fixed tolerance beyond superlinearity.
    auto median_survival = [](int n, int reps, std::uint64_t base) {
        std::vector<int> survived;
        long long budget = static_cast<long long>(n) * (n - 1) / 2;
        for (int i = 0; i < reps; ++i) {
            OnlineResult r = online_game(n, budget, RngSpec{base, (std::uint64_t)i});
            survived.push_back(r.failed ? r.failure_index - 1 : r.edges_played);
        }
        std::sort(survived.begin(), survived.end());
        return survived[survived.size() / 2];
    };
    const int reps = 200;
    double m100 = median_survival(100, reps, 907);
    double m200 = median_survival(200, reps, 908);
    double m400 = median_survival(400, reps, 909);
    CHECK(m200 > m100);
    CHECK(m400 > m200);
    double slope = std::log(m400 / m100) / std::log(4.0);
    CHECK(slope > 1.1);
    CHECK(slope < 1.6);
}
