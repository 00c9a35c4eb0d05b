#ifndef TRG_REPORTS_HPP
#define TRG_REPORTS_HPP

#include <string>

#include "collage.hpp"
#include "colouring.hpp"
#include "density.hpp"
#include "game.hpp"

namespace trg {

std::string obstruction_report_to_json(const ObstructionReport& rep);

// CSV rows "pattern,count" over the whole library, pattern names sorted.
std::string census_csv(const Graph& g);

// Rows "id,edges,vertices,well_behaved,very_well_behaved,density".
std::string collage_table_csv(const Graph& g, DensityMode mode, const BehaviourOptions& opts);

std::string core_log_to_json(const CoreLog& log);

std::string density_report_to_json(const DensityReport& rep);

std::string threshold_report_to_json(const ThresholdReport& rep, double n, double p);

std::string first_round_report_to_json(const FirstRoundResult& r, const GoodnessReport& goodness);

} // namespace trg

#endif
