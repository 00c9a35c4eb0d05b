// Command-line laboratory for the two-round triangle Ramsey game.  Talks to
// the core exclusively through the C API in trg/trg.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

extern "C" {
#include "trg/trg.h"
}

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { trg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct GraphGuard {
    trg_graph* g = nullptr;
    ~GraphGuard() { trg_graph_free(g); }
};

struct ColouringGuard {
    trg_colouring* c = nullptr;
    ~ColouringGuard() { trg_colouring_free(c); }
};

[[noreturn]] void die(const std::string& context) {
    std::cerr << "error: " << context << ": " << trg_last_error() << "\n";
    std::exit(1);
}

void check(trg_status s, const std::string& context) {
    if (s != TRG_OK) die(context);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(1);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(1);
    }
    out << content;
}

trg_graph* load_graph(const std::string& path) {
    trg_graph* g = nullptr;
    check(trg_graph_from_edge_list(slurp(path).c_str(), &g), "loading " + path);
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-round triangle Ramsey game laboratory"};
    app.require_subcommand(1);

    // census ---------------------------------------------------------------
    std::string graph_path, pattern_name, pattern_file, out_path = "-";
    auto* census = app.add_subcommand("census", "count pattern copies in a graph");
    census->add_option("--graph", graph_path, "edge-list file")->required();
    census->add_option("--pattern", pattern_name, "single library pattern (default: all)");
    census->add_option("--pattern-file", pattern_file,
                       "edge-list file with a custom pattern (at most 13 vertices)");
    census->callback([&] {
        GraphGuard g{load_graph(graph_path)};
        if (!pattern_file.empty()) {
            uint64_t count = 0;
            check(trg_census_count_custom(g.g, slurp(pattern_file).c_str(), &count), "census");
            std::cout << pattern_file << "," << count << "\n";
        } else if (pattern_name.empty()) {
            StringGuard csv;
            check(trg_census_csv(g.g, &csv.s), "census");
            std::cout << csv.str();
        } else {
            uint64_t count = 0;
            check(trg_census_count(g.g, pattern_name.c_str(), &count), "census");
            std::cout << pattern_name << "," << count << "\n";
        }
    });

    // colour -----------------------------------------------------------------
    std::string colour_out = "-", report_out;
    long long budget = 2'000'000;
    bool include_edges = false;
    auto* colour = app.add_subcommand(
        "colour", "search a triangle-free colouring and report obstructions");
    colour->add_option("--graph", graph_path, "edge-list file")->required();
    colour->add_option("--out", colour_out, "colouring output file (- for stdout)");
    colour->add_option("--report", report_out, "obstruction report JSON file");
    colour->add_option("--budget", budget, "search node budget");
    colour->add_flag("--include-edges", include_edges,
                     "dangerous pairs may include graph edges");
    colour->callback([&] {
        GraphGuard g{load_graph(graph_path)};
        ColouringGuard col;
        trg_status s = trg_find_triangle_free(g.g, budget, 1, &col.c);
        if (s == TRG_ERR_IMPOSSIBLE) {
            std::cerr << "graph is K3-Ramsey: no triangle-free colouring exists\n";
            std::exit(2);
        }
        check(s, "colour");
        StringGuard text;
        check(trg_colouring_write(col.c, &text.s), "colour");
        spit(colour_out, text.str());
        if (!report_out.empty()) {
            StringGuard rep;
            check(trg_obstruction_report_json(col.c, include_edges ? 1 : 0, &rep.s), "report");
            spit(report_out, rep.str());
        }
    });

    // collage ----------------------------------------------------------------
    std::string density_mode = "sufficient";
    double log_base = 0;
    auto* collage = app.add_subcommand("collage", "decompose into maximal collages");
    collage->add_option("--graph", graph_path, "edge-list file")->required();
    collage->add_option("--density-mode", density_mode, "exact | sufficient");
    collage->add_option("--log-base", log_base, "base of the log n size bound (default e)");
    collage->callback([&] {
        GraphGuard g{load_graph(graph_path)};
        StringGuard csv;
        check(trg_collage_table_csv(g.g, density_mode.c_str(), log_base, &csv.s), "collage");
        std::cout << csv.str();
    });

    // core ---------------------------------------------------------------------
    int collage_index = 0;
    double vertex_cap = 0;
    auto* core = app.add_subcommand("core", "core-extraction log of one collage");
    core->add_option("--graph", graph_path, "edge-list file")->required();
    core->add_option("--collage", collage_index, "collage id from the collage table")->required();
    core->add_option("--log-base", log_base, "base of the log n halting bound (default e)");
    core->add_option("--vertex-cap", vertex_cap, "override the log n halting bound");
    core->callback([&] {
        GraphGuard g{load_graph(graph_path)};
        StringGuard json;
        check(trg_core_log_json(g.g, collage_index, log_base, vertex_cap, &json.s), "core");
        std::cout << json.str() << "\n";
    });

    // vgc ------------------------------------------------------------------------
    std::uint64_t seed = 1;
    auto* vgc = app.add_subcommand(
        "vgc", "first-round colouring via collage discharging, with verification");
    vgc->add_option("--graph", graph_path, "edge-list file")->required();
    vgc->add_option("--out", colour_out, "colouring output file (- for stdout)");
    vgc->add_option("--report", report_out, "verification report JSON file");
    vgc->add_option("--budget", budget, "fallback search node budget");
    vgc->add_option("--seed", seed, "master seed");
    vgc->callback([&] {
        GraphGuard g{load_graph(graph_path)};
        ColouringGuard col;
        StringGuard rep;
        check(trg_first_round(g.g, "good", budget, seed, 0, &col.c, &rep.s), "vgc");
        StringGuard text;
        check(trg_colouring_write(col.c, &text.s), "vgc");
        spit(colour_out, text.str());
        if (!report_out.empty()) spit(report_out, rep.str());
        else std::cerr << rep.str() << "\n";
    });

    // play ------------------------------------------------------------------------
    int n = 100;
    double p = 0.05, q = 0.001;
    std::string strategy = "good", arrival = "random", emit = "csv";
    int trials = 1;
    auto* play = app.add_subcommand("play", "two-round games");
    play->add_option("--n", n, "vertex count")->required();
    play->add_option("--p", p, "round-one density")->required();
    play->add_option("--q", q, "round-two density")->required();
    play->add_option("--strategy", strategy, "good | naive | all_blue");
    play->add_option("--seed", seed, "master seed");
    play->add_option("--trials", trials, "independent trials");
    play->add_option("--arrival", arrival, "random | lex");
    play->add_option("--emit", emit, "csv | json (json dumps transcripts)");
    play->add_option("--budget", budget, "search node budget");
    play->callback([&] {
        if (emit == "csv") {
            std::cout << "trial,outcome,crrbb,crbbbb,dangerous_pairs,dangerous_k12\n";
        }
        for (int t = 0; t < trials; ++t) {
            StringGuard json;
            check(trg_two_round_game_json(n, p, q, strategy.c_str(), budget, seed,
                                          static_cast<uint64_t>(t), arrival.c_str(), 1, &json.s),
                  "play");
            if (emit == "json") {
                std::cout << json.str() << "\n";
            } else {
                // Cheap field scrape to avoid a JSON dependency on this side
                // of the C boundary.
                auto field = [&](const std::string& key) {
                    std::string text = json.str();
                    auto pos = text.find("\"" + key + "\"");
                    if (pos == std::string::npos) return std::string("?");
                    pos = text.find(':', pos);
                    auto end = text.find_first_of(",\n}", pos);
                    std::string value = text.substr(pos + 1, end - pos - 1);
                    value.erase(0, value.find_first_not_of(" \""));
                    value.erase(value.find_last_not_of(" \"") + 1);
                    return value;
                };
                std::cout << t << ',' << field("outcome") << ',' << field("crrbb") << ','
                          << field("crbbbb") << ',' << field("dangerous_pairs") << ','
                          << field("dangerous_k12") << "\n";
            }
        }
    });

    // online ---------------------------------------------------------------------
    long long edge_budget = 0;
    auto* online = app.add_subcommand("online", "online greedy game");
    online->add_option("--n", n, "vertex count")->required();
    online->add_option("--edges", edge_budget, "edges to reveal")->required();
    online->add_option("--seed", seed, "master seed");
    online->add_option("--trials", trials, "independent trials");
    online->callback([&] {
        std::cout << "trial,edges_played,failed,failure_index\n";
        for (int t = 0; t < trials; ++t) {
            long long played = 0, failure_index = 0;
            int failed = 0;
            check(trg_online_game(n, edge_budget, seed, static_cast<uint64_t>(t), &played,
                                  &failed, &failure_index),
                  "online");
            std::cout << t << ',' << played << ',' << failed << ',' << failure_index << "\n";
        }
    });

    // analyze -----------------------------------------------------------------------
    std::string colouring_path;
    auto* analyze = app.add_subcommand("analyze", "density report of the red subgraph");
    analyze->add_option("--graph", graph_path, "edge-list file")->required();
    analyze->add_option("--colouring", colouring_path, "colouring file")->required();
    analyze->add_option("--p", p, "ambient edge probability")->required();
    analyze->callback([&] {
        GraphGuard g{load_graph(graph_path)};
        ColouringGuard col;
        check(trg_colouring_read(g.g, slurp(colouring_path).c_str(), &col.c), "analyze");
        StringGuard json;
        check(trg_density_report_json(col.c, p, &json.s), "analyze");
        std::cout << json.str() << "\n";
    });

    // threshold -----------------------------------------------------------------------
    double thr_n = 0, window_factor = 0, zero_constant = 0;
    auto* threshold = app.add_subcommand("threshold", "completion threshold evaluator");
    threshold->add_option("--n", thr_n, "vertex count")->required();
    threshold->add_option("--p", p, "round-one density")->required();
    threshold->add_option("--window-factor", window_factor, "critical window width factor");
    threshold->add_option("--zero-constant", zero_constant, "Ramsey regime constant");
    threshold->callback([&] {
        StringGuard json;
        check(trg_threshold_json(thr_n, p, window_factor, zero_constant, &json.s), "threshold");
        std::cout << json.str() << "\n";
    });

    // lab --------------------------------------------------------------------------
    auto* lab = app.add_subcommand("lab", "Monte Carlo experiment driver");
    lab->require_subcommand(1);
    std::string config_path, sweep_out = "-";
    auto* sweep = lab->add_subcommand("sweep", "run a sweep from a JSON config");
    sweep->add_option("--config", config_path, "sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "CSV output path (- for stdout)");
    sweep->callback([&] {
        StringGuard csv;
        check(trg_run_sweep_csv(slurp(config_path).c_str(), &csv.s), "lab sweep");
        spit(sweep_out, csv.str());
    });
    std::string transcript_path;
    auto* replay = lab->add_subcommand("replay", "re-verify a stored game transcript");
    replay->add_option("--transcript", transcript_path, "transcript JSON")->required();
    replay->callback([&] {
        StringGuard detail;
        trg_status s = trg_replay_transcript(slurp(transcript_path).c_str(), &detail.s);
        std::cout << (s == TRG_OK ? "ok" : "mismatch") << ": " << detail.str() << "\n";
        if (s != TRG_OK) std::exit(3);
    });
    std::string points_path;
    auto* crossing = lab->add_subcommand("crossing", "estimate where a success curve crosses 1/2");
    crossing->add_option("--points", points_path,
                         "JSON [{\"q\":..,\"successes\":..,\"trials\":..}, ...]")
        ->required();
    crossing->callback([&] {
        StringGuard json;
        check(trg_estimate_crossing_json(slurp(points_path).c_str(), &json.s), "lab crossing");
        std::cout << json.str() << "\n";
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
