#include "reports.hpp"

#include <sstream>

#include "json.hpp"

#include "census.hpp"
#include "patterns.hpp"

namespace trg {

using nlohmann::json;

std::string obstruction_report_to_json(const ObstructionReport& rep) {
    json j;
    j["mono_triangles"] = rep.mono_triangles;
    j["crrbb_count"] = rep.crrbb_count;
    j["crbbbb_count"] = rep.crbbbb_count;
    json pairs = json::array();
    for (const Edge& e : rep.dangerous_pair_set.edges) pairs.push_back({e.u, e.v});
    j["dangerous_pairs"] = pairs;
    j["dangerous_pair_count"] = rep.dangerous_pair_set.edges.size();
    json k12 = json::array();
    for (const DangerousK12& d : rep.dangerous_k12_list) k12.push_back({d.w, d.u1, d.u2});
    j["dangerous_k12"] = k12;
    j["dangerous_k12_count"] = rep.dangerous_k12_list.size();
    return j.dump(2);
}

std::string census_csv(const Graph& g) {
    std::ostringstream out;
    out << "pattern,count\n";
    for (const auto& [name, pat] : pattern_library()) {
        out << name << ',' << count_copies(g, pat) << '\n';
    }
    return out.str();
}

std::string collage_table_csv(const Graph& g, DensityMode mode, const BehaviourOptions& opts) {
    std::ostringstream out;
    out << "id,edges,vertices,well_behaved,very_well_behaved,density\n";
    auto verdict_str = [](Verdict v) {
        switch (v) {
            case Verdict::yes: return "yes";
            case Verdict::no: return "no";
            default: return "indeterminate";
        }
    };
    int id = 0;
    for (const Collage& c : maximal_collages(g)) {
        VeryWellBehavedReport rep = is_very_well_behaved(c, g.n(), mode, opts);
        out << id++ << ',' << c.edge_count() << ',' << c.vertex_count() << ','
            << verdict_str(rep.behaviour.verdict) << ',' << verdict_str(rep.verdict) << ','
            << c.density().str() << '\n';
    }
    return out.str();
}

std::string core_log_to_json(const CoreLog& log) {
    json j;
    j["lv"] = log.lv;
    json le = json::array();
    for (const Edge& e : log.le) le.push_back({e.u, e.v});
    j["le"] = le;
    j["lo"] = log.lo;
    json ld = json::array();
    for (const auto& [step, edges] : log.ld) {
        json item;
        item["step"] = step;
        json es = json::array();
        for (const Edge& e : edges) es.push_back({e.u, e.v});
        item["edges"] = es;
        ld.push_back(item);
    }
    j["ld"] = ld;
    j["regular_root_high"] = log.regular_root_high;
    json snaps = json::array();
    for (const auto& s : log.snapshots) {
        snaps.push_back({{"step", s.step},
                         {"edges", s.edges},
                         {"vertices", s.vertices},
                         {"degenerate", s.degenerate_count}});
    }
    j["snapshots"] = snaps;
    json core = json::array();
    for (const Edge& e : log.core) core.push_back({e.u, e.v});
    j["core"] = core;
    switch (log.halt) {
        case CoreHalt::log_cap: j["halt"] = "degenerate_log_full"; break;
        case CoreHalt::vertex_cap: j["halt"] = "vertex_cap"; break;
        case CoreHalt::exhausted: j["halt"] = "collage_exhausted"; break;
    }
    return j.dump(2);
}

std::string density_report_to_json(const DensityReport& rep) {
    json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["x2"] = rep.x2;
    j["pi_size"] = rep.pi_size;
    j["xs_size"] = rep.xs_size;
    j["mu"] = rep.mu;
    j["delta1"] = rep.delta1;
    j["delta2"] = rep.delta2;
    j["delta_total"] = rep.delta_total;
    j["pair_path_count"] = rep.pair_path_count;
    j["pair_star_count"] = rep.pair_star_count;
    j["pair_triangle_count"] = rep.pair_triangle_count;
    return j.dump(2);
}

std::string threshold_report_to_json(const ThresholdReport& rep, double n, double p) {
    json j;
    j["n"] = n;
    j["p"] = p;
    switch (rep.flag) {
        case ThresholdFlag::upper: j["flag"] = "upper"; break;
        case ThresholdFlag::lower: j["flag"] = "lower"; break;
        case ThresholdFlag::critical_window: j["flag"] = "critical_window"; break;
        case ThresholdFlag::zero: j["flag"] = "zero"; break;
        case ThresholdFlag::below_range: j["flag"] = "below_range"; break;
    }
    if (rep.value) j["value"] = *rep.value;
    j["upper_value"] = rep.upper_value;
    j["lower_value"] = rep.lower_value;
    return j.dump(2);
}

std::string first_round_report_to_json(const FirstRoundResult& r, const GoodnessReport& goodness) {
    json j;
    switch (r.status) {
        case FirstRoundStatus::ok: j["status"] = "ok"; break;
        case FirstRoundStatus::budget_exhausted: j["status"] = "budget_exhausted"; break;
        case FirstRoundStatus::impossible: j["status"] = "impossible"; break;
        case FirstRoundStatus::greedy_failure: j["status"] = "greedy_failure"; break;
    }
    j["collages_total"] = r.collages_total;
    j["collages_discharged"] = r.collages_discharged;
    j["collages_searched"] = r.collages_searched;
    j["very_good"] = goodness.good;
    j["violated_condition"] = goodness.violated_condition;
    j["crrbb"] = goodness.crrbb;
    return j.dump(2);
}

} // namespace trg
