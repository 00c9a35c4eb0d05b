#ifndef TRG_GAME_HPP
#define TRG_GAME_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colouring.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace trg {

enum class StrategyVariant { good_colouring, naive_triangle_free, all_blue_greedy };

struct StrategySpec {
    StrategyVariant variant = StrategyVariant::good_colouring;
    long long search_budget = 2'000'000;       // nodes for triangle-free search
    bool recolour_non_triangle_blue = true;
};

StrategyVariant strategy_from_name(const std::string& name);
std::string strategy_name(StrategyVariant v);

enum class FirstRoundStatus {
    ok,
    budget_exhausted, // unknown: some collage search ran out of nodes
    impossible,       // proven: some collage is K3-Ramsey
    greedy_failure    // all_blue_greedy hit a red triangle in round one
};

struct FirstRoundResult {
    FirstRoundStatus status = FirstRoundStatus::ok;
    std::optional<TwoColouring> colouring;
    int collages_total = 0;
    int collages_discharged = 0; // coloured by the very good colourer
    int collages_searched = 0;   // coloured by backtracking search
};

// Round one: decompose into maximal collages, colour the ones satisfying the
// discharging preconditions with the very good colourer and the rest with a
// triangle-free search (good_colouring); or search the whole graph (naive);
// or play the online greedy rule over a random order (all_blue_greedy).
FirstRoundResult first_round_colouring(std::shared_ptr<const Graph> g,
                                       const StrategySpec& strategy, Rng* order_rng = nullptr);

struct GreedyFailure {
    Edge edge;
    std::array<int, 3> red_triangle;
};

struct GreedyResult {
    TwoColouring colouring; // on the union graph; partial on failure
    std::optional<GreedyFailure> failure;
    int coloured = 0; // new edges coloured before the failure
};

// Colour each new edge blue unless that closes a blue triangle, then red; the
// first red assignment completing a red triangle is the failure witness.
GreedyResult greedy_extend(const Graph& g1, const TwoColouring& phi1, const Graph& g2,
                           const std::vector<Edge>& order);

enum class GameOutcome { success, extension_failure, first_round_failure };

struct TrialStats {
    std::uint64_t crrbb = 0;
    std::uint64_t crbbbb = 0;
    std::uint64_t dangerous_pair_count = 0;
    std::uint64_t dangerous_k12_count = 0;
};

enum class ArrivalMode { random, lexicographic };

struct GameTranscript {
    int n = 0;
    double p = 0, q = 0;
    StrategySpec strategy;
    RngSpec rng;
    ArrivalMode arrival = ArrivalMode::random;
    std::vector<Edge> g1_edges;
    std::vector<Edge> g2_edges;
    std::vector<Edge> arrival_order; // E(g2) \ E(g1) in play order
    std::vector<std::pair<Edge, Colour>> decisions;
    std::string phi1; // colouring file text of round one
    GameOutcome outcome = GameOutcome::success;
    FirstRoundStatus first_round_status = FirstRoundStatus::ok;
    std::optional<GreedyFailure> failure;
    TrialStats stats;
    bool collect_stats = true;
};

GameTranscript two_round_game(int n, double p, double q, const StrategySpec& strategy,
                              RngSpec rng, ArrivalMode arrival = ArrivalMode::random,
                              bool collect_stats = true);

std::string transcript_to_json(const GameTranscript& t);

struct ReplayReport {
    bool ok = false;
    std::string detail;
};
// Re-runs a stored game from its seeds and checks the stored record matches;
// also validates the failure witness.
ReplayReport replay_transcript(const std::string& json_text);

struct OnlineResult {
    int edges_played = 0;   // edges revealed, including the failing one
    bool failed = false;
    int failure_index = 0;  // 1-based reveal index of the failure; 0 if none
    Edge failing_edge{};
    std::array<int, 3> red_triangle{{-1, -1, -1}};
};

// Online game: reveal a uniformly random permutation of E(K_n) one edge at a
// time, colouring greedily (blue unless a blue triangle, else red).  Stops at
// the first monochromatic triangle or after edge_budget edges.
OnlineResult online_game(int n, long long edge_budget, RngSpec rng);

} // namespace trg

#endif
