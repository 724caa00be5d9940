#pragma once

#include <string>
#include <vector>

#include "mobisim/sim_engine.hpp"

namespace mobisim {

// Closed-form cost report for one scheme under the configured scenario.
// Requires a fixed speed; a random correspondent averages uniformly.
CostReport analytic_report(Scheme scheme, const ScenarioConfig& c,
                           const ScenarioContext& ctx);

// Each writer returns the names of the files it created inside `dir`.
// Output bytes are a pure function of the inputs.
std::vector<std::string> write_analytic_outputs(const std::string& dir,
                                                const ScenarioConfig& c,
                                                const ScenarioContext& ctx);

std::vector<std::string> write_simulation_outputs(const std::string& dir,
                                                  const ScenarioConfig& c,
                                                  const ScenarioResult& result);

std::vector<std::string> write_comparison_outputs(const std::string& dir,
                                                  const ScenarioConfig& c,
                                                  const std::vector<ComparisonRow>& rows);

struct SweepRow {
  double speed_mph = 0;
  double pmip_signaling_hb = 0, pmip_delivery_hb = 0;
  double icn_signaling_hb = 0, icn_delivery_hb = 0;
  double handovers = 0;
};

SweepRow summarize_sweep_point(double speed_mph, const ScenarioResult& result);

std::vector<std::string> write_sweep_outputs(const std::string& dir,
                                             const std::vector<SweepRow>& rows);

void write_manifest(const std::string& dir, const RunManifest& manifest);

std::string format_double(double v);  // %.12g

}  // namespace mobisim
