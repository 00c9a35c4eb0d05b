#ifndef TRG_SWEEP_HPP
#define TRG_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "game.hpp"

namespace trg {

struct SweepConfig {
    std::vector<int> n_values;
    std::vector<double> gamma_values; // p = n^-gamma
    std::vector<double> p_values;     // explicit p, used when gamma list empty
    std::vector<double> q_values;     // explicit q grid
    // Used when q_values is empty: q = multiplier * completion_threshold(n,p)
    // (geometric mean of the two branch values inside the critical window).
    std::vector<double> q_multipliers = {1e-2, 1e-1, 1.0, 1e1, 1e2};
    int trials = 100;
    std::string strategy = "good";
    long long search_budget = 2'000'000;
    std::string arrival = "random";
    std::uint64_t master_seed = 1;
    int workers = 0;             // 0 = hardware concurrency (capped at 8)
    bool measure_runtime = false; // off by default so output bytes are stable
    bool collect_stats = true;

    static SweepConfig from_json(const std::string& text);
    std::string to_json() const;
};

struct WilsonInterval {
    double lo = 0;
    double hi = 1;
};
WilsonInterval wilson_interval(long long successes, long long trials, double z = 1.959963984540054);

struct CellResult {
    int n = 0;
    double p = 0;
    double q = 0;
    int trials = 0;
    int successes = 0;
    WilsonInterval wilson;
    double crrbb_mean = 0;
    double crbbbb_mean = 0;
    double dangerous_pairs_mean = 0;
    double dangerous_k12_mean = 0;
    int first_round_failures = 0;
    double runtime_ms = 0;
    bool flagged = false; // > 10% first-round failures
};

// Runs trials over the (n, p, q) grid on a bounded worker pool.  Stream ids
// are injective over (cell, trial), and the reduction is an ordered fold, so
// identical configs give byte-identical CSV whatever the thread timing.
std::vector<CellResult> run_sweep(const SweepConfig& cfg);

std::string results_to_csv(const std::vector<CellResult>& results);

struct CrossingPoint {
    double q = 0;
    int successes = 0;
    int trials = 0;
};

struct CrossingEstimate {
    double q_hat = 0;
    double lo = 0;
    double hi = 0;
};

// Isotonic (nonincreasing in log q) fit of success rates; returns where the
// fitted curve crosses 1/2, with a seeded bootstrap percentile interval.
// Requires points on both sides of 1/2.
CrossingEstimate estimate_crossing(std::vector<CrossingPoint> curve, int bootstrap = 1000,
                                   std::uint64_t seed = 7);

} // namespace trg

#endif
