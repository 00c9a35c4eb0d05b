#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "density.hpp"
#include "errors.hpp"

namespace trg {

using nlohmann::json;

SweepConfig SweepConfig::from_json(const std::string& text) {
    json j = json::parse(text);
    SweepConfig cfg;
    cfg.n_values = j.at("n").get<std::vector<int>>();
    if (j.contains("gamma")) cfg.gamma_values = j.at("gamma").get<std::vector<double>>();
    if (j.contains("p")) cfg.p_values = j.at("p").get<std::vector<double>>();
    if (j.contains("q")) cfg.q_values = j.at("q").get<std::vector<double>>();
    if (j.contains("q_multipliers"))
        cfg.q_multipliers = j.at("q_multipliers").get<std::vector<double>>();
    cfg.trials = j.value("trials", cfg.trials);
    cfg.strategy = j.value("strategy", cfg.strategy);
    cfg.search_budget = j.value("search_budget", cfg.search_budget);
    cfg.arrival = j.value("arrival", cfg.arrival);
    cfg.master_seed = j.value("master_seed", cfg.master_seed);
    cfg.workers = j.value("workers", cfg.workers);
    cfg.measure_runtime = j.value("measure_runtime", cfg.measure_runtime);
    cfg.collect_stats = j.value("collect_stats", cfg.collect_stats);
    if (cfg.n_values.empty()) throw invalid_argument_error("sweep config: empty n grid");
    if (cfg.gamma_values.empty() && cfg.p_values.empty()) {
        throw invalid_argument_error("sweep config: need gamma or p grid");
    }
    if (cfg.trials < 1) throw invalid_argument_error("sweep config: trials must be >= 1");
    for (double q : cfg.q_values) {
        if (!(q > 0 && q <= 1)) throw invalid_argument_error("sweep config: q outside (0,1]");
    }
    strategy_from_name(cfg.strategy); // validates
    return cfg;
}

std::string SweepConfig::to_json() const {
    json j;
    j["n"] = n_values;
    if (!gamma_values.empty()) j["gamma"] = gamma_values;
    if (!p_values.empty()) j["p"] = p_values;
    if (!q_values.empty()) j["q"] = q_values;
    j["q_multipliers"] = q_multipliers;
    j["trials"] = trials;
    j["strategy"] = strategy;
    j["search_budget"] = search_budget;
    j["arrival"] = arrival;
    j["master_seed"] = master_seed;
    j["workers"] = workers;
    j["measure_runtime"] = measure_runtime;
    j["collect_stats"] = collect_stats;
    return j.dump(2);
}

WilsonInterval wilson_interval(long long successes, long long trials, double z) {
    if (trials <= 0) return {0, 1};
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double centre = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

struct Cell {
    int n;
    double p;
    double q;
};

std::vector<Cell> expand_cells(const SweepConfig& cfg) {
    std::vector<Cell> cells;
    for (int n : cfg.n_values) {
        std::vector<double> ps;
        if (!cfg.gamma_values.empty()) {
            for (double g : cfg.gamma_values) ps.push_back(std::pow(n, -g));
        } else {
            ps = cfg.p_values;
        }
        for (double p : ps) {
            if (!(p > 0 && p < 1)) {
                throw invalid_argument_error("sweep: p outside (0,1)");
            }
            std::vector<double> qs = cfg.q_values;
            if (qs.empty()) {
                ThresholdReport thr = completion_threshold(n, p);
                double base = thr.value && *thr.value > 0
                                  ? *thr.value
                                  : std::sqrt(thr.upper_value * thr.lower_value);
                for (double m : cfg.q_multipliers) {
                    double q = std::min(1.0, m * base);
                    if (q > 0) qs.push_back(q);
                }
            }
            for (double q : qs) cells.push_back({n, p, q});
        }
    }
    return cells;
}

struct TrialOutcome {
    bool success = false;
    bool first_round_failure = false;
    TrialStats stats;
    double runtime_ms = 0;
};

} // namespace

std::vector<CellResult> run_sweep(const SweepConfig& cfg) {
    const std::vector<Cell> cells = expand_cells(cfg);
    StrategySpec strategy;
    strategy.variant = strategy_from_name(cfg.strategy);
    strategy.search_budget = cfg.search_budget;
    ArrivalMode arrival =
        cfg.arrival == "lex" ? ArrivalMode::lexicographic : ArrivalMode::random;

    const std::size_t total = cells.size() * static_cast<std::size_t>(cfg.trials);
    std::vector<TrialOutcome> outcomes(total);

    auto run_trial = [&](std::size_t flat) {
        std::size_t cell_idx = flat / static_cast<std::size_t>(cfg.trials);
        const Cell& cell = cells[cell_idx];
        RngSpec spec{cfg.master_seed, static_cast<std::uint64_t>(flat)};
        TrialOutcome& out = outcomes[flat];
        auto t0 = std::chrono::steady_clock::now();
        try {
            GameTranscript t = two_round_game(cell.n, cell.p, cell.q, strategy, spec, arrival,
                                              cfg.collect_stats);
            out.success = t.outcome == GameOutcome::success;
            out.first_round_failure = t.outcome == GameOutcome::first_round_failure;
            out.stats = t.stats;
        } catch (const std::exception&) {
            // Per-trial errors never abort the sweep; they land in the
            // first-round-failure bucket so the accounting stays closed.
            out.first_round_failure = true;
        }
        if (cfg.measure_runtime) {
            out.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        }
    };

    int workers = cfg.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    }
    if (workers <= 1 || total <= 1) {
        for (std::size_t i = 0; i < total; ++i) run_trial(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= total) return;
                    run_trial(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Ordered fold by (cell, trial): output is independent of scheduling.
    std::vector<CellResult> results;
    results.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        CellResult r;
        r.n = cells[c].n;
        r.p = cells[c].p;
        r.q = cells[c].q;
        r.trials = cfg.trials;
        double crrbb = 0, crbbbb = 0, dp = 0, dk = 0, ms = 0;
        int coloured_rounds = 0;
        for (int t = 0; t < cfg.trials; ++t) {
            const TrialOutcome& out = outcomes[c * static_cast<std::size_t>(cfg.trials) +
                                               static_cast<std::size_t>(t)];
            if (out.success) ++r.successes;
            if (out.first_round_failure) {
                ++r.first_round_failures;
            } else {
                ++coloured_rounds;
                crrbb += static_cast<double>(out.stats.crrbb);
                crbbbb += static_cast<double>(out.stats.crbbbb);
                dp += static_cast<double>(out.stats.dangerous_pair_count);
                dk += static_cast<double>(out.stats.dangerous_k12_count);
            }
            ms += out.runtime_ms;
        }
        if (coloured_rounds > 0) {
            r.crrbb_mean = crrbb / coloured_rounds;
            r.crbbbb_mean = crbbbb / coloured_rounds;
            r.dangerous_pairs_mean = dp / coloured_rounds;
            r.dangerous_k12_mean = dk / coloured_rounds;
        }
        r.runtime_ms = ms / cfg.trials;
        r.wilson = wilson_interval(r.successes, r.trials);
        r.flagged = r.first_round_failures * 10 > r.trials;
        results.push_back(r);
    }
    return results;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string results_to_csv(const std::vector<CellResult>& results) {
    std::ostringstream out;
    out << "n,p,q,trials,successes,wilson_lo,wilson_hi,crrbb_mean,crbbbb_mean,"
           "dangerous_pairs_mean,dangerous_k12_mean,first_round_failures,runtime_ms\n";
    for (const CellResult& r : results) {
        out << r.n << ',' << fmt_double(r.p) << ',' << fmt_double(r.q) << ',' << r.trials << ','
            << r.successes << ',' << fmt_double(r.wilson.lo) << ',' << fmt_double(r.wilson.hi)
            << ',' << fmt_double(r.crrbb_mean) << ',' << fmt_double(r.crbbbb_mean) << ','
            << fmt_double(r.dangerous_pairs_mean) << ',' << fmt_double(r.dangerous_k12_mean)
            << ',' << r.first_round_failures << ',' << fmt_double(r.runtime_ms) << '\n';
    }
    return out.str();
}

namespace {

// Pool-adjacent-violators for a nonincreasing fit, then the log-q point where
// the step curve crosses one half (linear interpolation between block means).
double isotonic_crossing(const std::vector<CrossingPoint>& curve,
                         const std::vector<double>& rates) {
    struct Pool {
        double sum;
        double weight;
        double lo_logq;
        double hi_logq;
        double mean() const { return sum / weight; }
    };
    std::vector<Pool> pools;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        double lq = std::log(curve[i].q);
        pools.push_back({rates[i] * curve[i].trials, static_cast<double>(curve[i].trials), lq, lq});
        while (pools.size() >= 2 && pools[pools.size() - 2].mean() < pools.back().mean()) {
            Pool b = pools.back();
            pools.pop_back();
            pools.back().sum += b.sum;
            pools.back().weight += b.weight;
            pools.back().hi_logq = b.hi_logq;
        }
    }
    // Walk adjacent pool means for the 1/2 crossing.
    for (std::size_t i = 0; i + 1 < pools.size(); ++i) {
        double a = pools[i].mean(), b = pools[i + 1].mean();
        if (a >= 0.5 && b < 0.5) {
            double xa = 0.5 * (pools[i].lo_logq + pools[i].hi_logq);
            double xb = 0.5 * (pools[i + 1].lo_logq + pools[i + 1].hi_logq);
            double frac = (a - 0.5) / (a - b);
            return std::exp(xa + frac * (xb - xa));
        }
    }
    // Curve never straddles between pools: clamp to the side it leaves.
    if (pools.front().mean() < 0.5) return std::exp(pools.front().lo_logq);
    return std::exp(pools.back().hi_logq);
}

} // namespace

CrossingEstimate estimate_crossing(std::vector<CrossingPoint> curve, int bootstrap,
                                   std::uint64_t seed) {
    if (curve.size() < 3) throw invalid_argument_error("crossing estimate needs >= 3 points");
    std::sort(curve.begin(), curve.end(),
              [](const CrossingPoint& a, const CrossingPoint& b) { return a.q < b.q; });
    bool above = false, below = false;
    std::vector<double> rates;
    for (const CrossingPoint& p : curve) {
        if (p.trials <= 0 || p.successes < 0 || p.successes > p.trials || !(p.q > 0)) {
            throw invalid_argument_error("crossing estimate: malformed point");
        }
        double rate = static_cast<double>(p.successes) / p.trials;
        rates.push_back(rate);
        if (rate > 0.5) above = true;
        if (rate < 0.5) below = true;
    }
    if (!above || !below) {
        throw invalid_argument_error("crossing estimate: curve does not bracket 1/2");
    }

    CrossingEstimate est;
    est.q_hat = isotonic_crossing(curve, rates);

    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(bootstrap));
    Rng rng(RngSpec{seed, 0});
    for (int b = 0; b < bootstrap; ++b) {
        std::vector<double> resampled(curve.size());
        for (std::size_t i = 0; i < curve.size(); ++i) {
            int hits = 0;
            for (int t = 0; t < curve[i].trials; ++t) {
                if (rng.next_unit() < rates[i]) ++hits;
            }
            resampled[i] = static_cast<double>(hits) / curve[i].trials;
        }
        samples.push_back(isotonic_crossing(curve, resampled));
    }
    std::sort(samples.begin(), samples.end());
    est.lo = samples[static_cast<std::size_t>(0.025 * (samples.size() - 1))];
    est.hi = samples[static_cast<std::size_t>(0.975 * (samples.size() - 1))];
    return est;
}

} // namespace trg
