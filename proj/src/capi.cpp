#include "trg/trg.h"

#include <cstring>
#include <memory>
#include <string>

#include "json.hpp"

#include "census.hpp"
#include "collage.hpp"
#include "colouring.hpp"
#include "density.hpp"
#include "discharge.hpp"
#include "errors.hpp"
#include "game.hpp"
#include "graph.hpp"
#include "patterns.hpp"
#include "reports.hpp"
#include "sweep.hpp"

struct trg_graph {
    std::shared_ptr<const trg::Graph> g;
};

struct trg_colouring {
    trg::TwoColouring col;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
trg_status guard(Fn&& fn) {
    try {
        return fn();
    } catch (const trg::parse_error& e) {
        g_last_error = e.what();
        return TRG_ERR_PARSE;
    } catch (const trg::too_large_error& e) {
        g_last_error = e.what();
        return TRG_ERR_TOO_LARGE;
    } catch (const trg::budget_exhausted_error& e) {
        g_last_error = e.what();
        return TRG_ERR_BUDGET_EXHAUSTED;
    } catch (const trg::precondition_error& e) {
        g_last_error = e.what();
        return TRG_ERR_PRECONDITION;
    } catch (const trg::falsification_error& e) {
        g_last_error = e.what();
        return TRG_ERR_FALSIFIED;
    } catch (const trg::invalid_argument_error& e) {
        g_last_error = e.what();
        return TRG_ERR_INVALID_ARGUMENT;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return TRG_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TRG_ERR_INTERNAL;
    }
}

trg_status require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return TRG_ERR_INVALID_ARGUMENT;
    }
    return TRG_OK;
}

} // namespace

extern "C" {

const char* trg_version(void) { return "0.1.0"; }

const char* trg_last_error(void) { return g_last_error.c_str(); }

void trg_string_free(char* s) { std::free(s); }

/* ---- graphs ---------------------------------------------------------- */

trg_status trg_graph_from_edge_list(const char* text, trg_graph** out) {
    if (trg_status s = require(text && out, "null argument")) return s;
    return guard([&] {
        auto g = std::make_shared<trg::Graph>(trg::read_edge_list(text));
        *out = new trg_graph{std::move(g)};
        return TRG_OK;
    });
}

trg_status trg_graph_to_edge_list(const trg_graph* g, char** out) {
    if (trg_status s = require(g && out, "null argument")) return s;
    return guard([&] {
        *out = dup_string(trg::write_edge_list(*g->g));
        return TRG_OK;
    });
}

trg_status trg_graph_sample_gnp(int n, double p, uint64_t master_seed, uint64_t stream_id,
                                trg_graph** out) {
    if (trg_status s = require(out != nullptr, "null argument")) return s;
    return guard([&] {
        auto g = std::make_shared<trg::Graph>(
            trg::sample_gnp(n, p, trg::RngSpec{master_seed, stream_id}));
        *out = new trg_graph{std::move(g)};
        return TRG_OK;
    });
}

trg_status trg_graph_union(const trg_graph* a, const trg_graph* b, trg_graph** out) {
    if (trg_status s = require(a && b && out, "null argument")) return s;
    return guard([&] {
        auto g = std::make_shared<trg::Graph>(trg::graph_union(*a->g, *b->g));
        *out = new trg_graph{std::move(g)};
        return TRG_OK;
    });
}

void trg_graph_free(trg_graph* g) { delete g; }

int trg_graph_n(const trg_graph* g) { return g ? g->g->n() : -1; }

long long trg_graph_m(const trg_graph* g) { return g ? g->g->m() : -1; }

int trg_graph_max_degree(const trg_graph* g) { return g ? g->g->max_degree() : -1; }

/* ---- pattern census --------------------------------------------------- */

trg_status trg_pattern_names(char** out_csv) {
    if (trg_status s = require(out_csv != nullptr, "null argument")) return s;
    return guard([&] {
        std::string names;
        for (const auto& [name, pat] : trg::pattern_library()) {
            if (!names.empty()) names += ',';
            names += name;
        }
        *out_csv = dup_string(names);
        return TRG_OK;
    });
}

trg_status trg_census_count(const trg_graph* g, const char* name, uint64_t* out) {
    if (trg_status s = require(g && name && out, "null argument")) return s;
    return guard([&] {
        *out = trg::count_copies(*g->g, trg::pattern(name));
        return TRG_OK;
    });
}

trg_status trg_census_count_custom(const trg_graph* g, const char* pattern_edge_list,
                                   uint64_t* out) {
    if (trg_status s = require(g && pattern_edge_list && out, "null argument")) return s;
    return guard([&] {
        trg::Pattern custom{"custom", trg::read_edge_list(pattern_edge_list)};
        *out = trg::count_copies(*g->g, custom);
        return TRG_OK;
    });
}

trg_status trg_census_csv(const trg_graph* g, char** out) {
    if (trg_status s = require(g && out, "null argument")) return s;
    return guard([&] {
        *out = dup_string(trg::census_csv(*g->g));
        return TRG_OK;
    });
}

trg_status trg_pattern_density(const char* name, int64_t* num, int64_t* den) {
    if (trg_status s = require(name && num && den, "null argument")) return s;
    return guard([&] {
        trg::Rat d = trg::max_subgraph_density(trg::pattern(name));
        *num = d.num();
        *den = d.den();
        return TRG_OK;
    });
}

/* ---- colourings ------------------------------------------------------- */

trg_status trg_colouring_read(const trg_graph* g, const char* text, trg_colouring** out) {
    if (trg_status s = require(g && text && out, "null argument")) return s;
    return guard([&] {
        *out = new trg_colouring{trg::read_colouring(g->g, text)};
        return TRG_OK;
    });
}

trg_status trg_colouring_write(const trg_colouring* c, char** out) {
    if (trg_status s = require(c && out, "null argument")) return s;
    return guard([&] {
        *out = dup_string(trg::write_colouring(c->col));
        return TRG_OK;
    });
}

void trg_colouring_free(trg_colouring* c) { delete c; }

trg_status trg_obstruction_report_json(const trg_colouring* c, int include_graph_edges,
                                       char** out) {
    if (trg_status s = require(c && out, "null argument")) return s;
    return guard([&] {
        *out = dup_string(trg::obstruction_report_to_json(
            trg::obstruction_report(c->col, include_graph_edges != 0)));
        return TRG_OK;
    });
}

trg_status trg_is_t_good(const trg_colouring* c, uint64_t t, int* good, int* violated) {
    if (trg_status s = require(c && good && violated, "null argument")) return s;
    return guard([&] {
        trg::GoodnessReport rep = trg::is_t_good(c->col, t);
        *good = rep.good ? 1 : 0;
        *violated = rep.violated_condition;
        return TRG_OK;
    });
}

trg_status trg_find_triangle_free(const trg_graph* g, long long node_budget, int recolour_blue,
                                  trg_colouring** out) {
    if (trg_status s = require(g && out, "null argument")) return s;
    return guard([&] {
        trg::SearchResult res =
            trg::find_triangle_free_colouring(g->g, node_budget, recolour_blue != 0);
        switch (res.status) {
            case trg::SearchStatus::found:
                *out = new trg_colouring{std::move(*res.colouring)};
                return TRG_OK;
            case trg::SearchStatus::impossible:
                g_last_error = "graph is K3-Ramsey: search space exhausted";
                return TRG_ERR_IMPOSSIBLE;
            case trg::SearchStatus::budget_exhausted:
                g_last_error = "node budget exhausted before a decision";
                return TRG_ERR_BUDGET_EXHAUSTED;
        }
        return TRG_ERR_INTERNAL;
    });
}

/* ---- collages ---------------------------------------------------------- */

namespace {

trg::DensityMode parse_density_mode(const char* mode) {
    std::string m = mode;
    if (m == "exact") return trg::DensityMode::exact;
    if (m == "sufficient") return trg::DensityMode::sufficient;
    throw trg::invalid_argument_error("density mode must be 'exact' or 'sufficient'");
}

} // namespace

trg_status trg_collage_table_csv(const trg_graph* g, const char* density_mode, double log_base,
                                 char** out) {
    if (trg_status s = require(g && density_mode && out, "null argument")) return s;
    return guard([&] {
        trg::BehaviourOptions opts;
        if (log_base > 0) opts.log_base = log_base;
        *out = dup_string(trg::collage_table_csv(*g->g, parse_density_mode(density_mode), opts));
        return TRG_OK;
    });
}

trg_status trg_core_log_json(const trg_graph* g, int collage_index, double log_base,
                             double vertex_cap, char** out) {
    if (trg_status s = require(g && out, "null argument")) return s;
    return guard([&] {
        auto collages = trg::maximal_collages(*g->g);
        if (collage_index < 0 || collage_index >= static_cast<int>(collages.size())) {
            throw trg::invalid_argument_error("collage index out of range");
        }
        trg::CoreOptions opts;
        if (log_base > 0) opts.log_base = log_base;
        if (vertex_cap > 0) opts.vertex_cap = vertex_cap;
        trg::CoreLog log = trg::extract_core(collages[collage_index], g->g->n(), opts);
        *out = dup_string(trg::core_log_to_json(log));
        return TRG_OK;
    });
}

/* ---- games ------------------------------------------------------------- */

namespace {

trg::ArrivalMode parse_arrival(const char* arrival) {
    std::string a = arrival;
    if (a == "random") return trg::ArrivalMode::random;
    if (a == "lex") return trg::ArrivalMode::lexicographic;
    throw trg::invalid_argument_error("arrival must be 'random' or 'lex'");
}

} // namespace

trg_status trg_first_round(const trg_graph* g, const char* strategy, long long node_budget,
                           uint64_t master_seed, uint64_t stream_id, trg_colouring** out_col,
                           char** out_report_json) {
    if (trg_status s = require(g && strategy && out_col, "null argument")) return s;
    return guard([&] {
        trg::StrategySpec spec;
        spec.variant = trg::strategy_from_name(strategy);
        if (node_budget > 0) spec.search_budget = node_budget;
        trg::Rng order(trg::RngSpec{master_seed, stream_id}, trg::kRngTagArrival);
        trg::FirstRoundResult res = trg::first_round_colouring(g->g, spec, &order);
        if (res.status != trg::FirstRoundStatus::ok) {
            g_last_error = "first round failed";
            return res.status == trg::FirstRoundStatus::budget_exhausted
                       ? TRG_ERR_BUDGET_EXHAUSTED
                       : TRG_ERR_IMPOSSIBLE;
        }
        if (out_report_json) {
            trg::GoodnessReport good = trg::is_t_good(*res.colouring, 1);
            *out_report_json = dup_string(trg::first_round_report_to_json(res, good));
        }
        *out_col = new trg_colouring{std::move(*res.colouring)};
        return TRG_OK;
    });
}

trg_status trg_two_round_game_json(int n, double p, double q, const char* strategy,
                                   long long node_budget, uint64_t master_seed,
                                   uint64_t stream_id, const char* arrival, int collect_stats,
                                   char** out_json) {
    if (trg_status s = require(strategy && arrival && out_json, "null argument")) return s;
    return guard([&] {
        trg::StrategySpec spec;
        spec.variant = trg::strategy_from_name(strategy);
        if (node_budget > 0) spec.search_budget = node_budget;
        trg::GameTranscript t =
            trg::two_round_game(n, p, q, spec, trg::RngSpec{master_seed, stream_id},
                                parse_arrival(arrival), collect_stats != 0);
        *out_json = dup_string(trg::transcript_to_json(t));
        return TRG_OK;
    });
}

trg_status trg_replay_transcript(const char* transcript_json, char** out_detail) {
    if (trg_status s = require(transcript_json != nullptr, "null argument")) return s;
    return guard([&] {
        trg::ReplayReport rep = trg::replay_transcript(transcript_json);
        if (out_detail) *out_detail = dup_string(rep.ok ? "replay matched" : rep.detail);
        if (!rep.ok) {
            g_last_error = rep.detail;
            return TRG_ERR_FALSIFIED;
        }
        return TRG_OK;
    });
}

trg_status trg_online_game(int n, long long edge_budget, uint64_t master_seed,
                           uint64_t stream_id, long long* edges_played, int* failed,
                           long long* failure_index) {
    if (trg_status s = require(edges_played && failed && failure_index, "null argument"))
        return s;
    return guard([&] {
        trg::OnlineResult res =
            trg::online_game(n, edge_budget, trg::RngSpec{master_seed, stream_id});
        *edges_played = res.edges_played;
        *failed = res.failed ? 1 : 0;
        *failure_index = res.failure_index;
        return TRG_OK;
    });
}

/* ---- density analysis --------------------------------------------------- */

trg_status trg_density_report_json(const trg_colouring* c, double p, char** out) {
    if (trg_status s = require(c && out, "null argument")) return s;
    return guard([&] {
        trg::EdgeSubset red = c->col.colour_class(trg::Colour::red);
        *out = dup_string(trg::density_report_to_json(trg::janson_params(red, p)));
        return TRG_OK;
    });
}

trg_status trg_threshold_json(double n, double p, double window_factor, double zero_constant,
                              char** out) {
    if (trg_status s = require(out != nullptr, "null argument")) return s;
    return guard([&] {
        trg::ThresholdOptions opts;
        if (window_factor > 0) opts.critical_window_factor = window_factor;
        if (zero_constant > 0) opts.zero_constant = zero_constant;
        *out = dup_string(
            trg::threshold_report_to_json(trg::completion_threshold(n, p, opts), n, p));
        return TRG_OK;
    });
}

/* ---- experiment lab ------------------------------------------------------ */

trg_status trg_run_sweep_csv(const char* config_json, char** out_csv) {
    if (trg_status s = require(config_json && out_csv, "null argument")) return s;
    return guard([&] {
        trg::SweepConfig cfg = trg::SweepConfig::from_json(config_json);
        *out_csv = dup_string(trg::results_to_csv(trg::run_sweep(cfg)));
        return TRG_OK;
    });
}

trg_status trg_estimate_crossing_json(const char* points_json, char** out_json) {
    if (trg_status s = require(points_json && out_json, "null argument")) return s;
    return guard([&] {
        nlohmann::json j = nlohmann::json::parse(points_json);
        std::vector<trg::CrossingPoint> points;
        for (const auto& item : j) {
            points.push_back({item.at("q").get<double>(), item.at("successes").get<int>(),
                              item.at("trials").get<int>()});
        }
        trg::CrossingEstimate est = trg::estimate_crossing(points);
        nlohmann::json out;
        out["q_hat"] = est.q_hat;
        out["lo"] = est.lo;
        out["hi"] = est.hi;
        *out_json = dup_string(out.dump(2));
        return TRG_OK;
    });
}

} // extern "C"
