#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "mobisim/scenario.hpp"

namespace mobisim {

struct SchemeTotals {
  std::int64_t signaling_hb = 0;
  std::int64_t delivery_hb = 0;
  std::int64_t handovers = 0;
  std::vector<double> latency_samples;

  std::int64_t total_hb() const { return signaling_hb + delivery_hb; }
  double mean_latency() const;
};

struct ReplicationResult {
  int replication = 0;
  std::optional<SchemeTotals> pmip;
  std::optional<SchemeTotals> icn;
  std::int64_t move_events = 0;
  std::int64_t packet_events = 0;
};

// Shared per-scenario context: one topology and direction matrix serve all
// replications; both are immutable here.
struct ScenarioContext {
  TopologyGraph graph;
  Eigen::MatrixXi hops;
  DirectionMatrix direction;

  static ScenarioContext build(const ScenarioConfig& c,
                               std::optional<int> nodes_override = std::nullopt);
};

std::uint64_t replication_seed(const ScenarioConfig& c, int replication);

// One fully deterministic replication. Mobile placements, speeds,
// correspondents, dwells and packet arrivals come from per-(mobile, purpose)
// seed-derived streams; when both schemes run they share the exact same
// trajectories and arrivals.
ReplicationResult run_replication(const ScenarioConfig& c, const ScenarioContext& ctx,
                                  int replication);

struct ScenarioResult {
  ScenarioContext context;
  std::vector<ReplicationResult> replications;
};

// All replications, executed on up to `threads` workers (0 -> all cores,
// capped by the MOBISIM_THREADS environment variable). Results are ordered
// by replication index regardless of scheduling.
ScenarioResult run_scenario(const ScenarioConfig& c, int threads = 0,
                            std::optional<int> nodes_override = std::nullopt);

int effective_thread_count(int requested, int replications);

struct ComparisonRow {
  int size = 0;
  double pmip_signaling_hb = 0, pmip_delivery_hb = 0, pmip_total_hb = 0;
  double icn_signaling_hb = 0, icn_delivery_hb = 0, icn_total_hb = 0;
  double total_ratio = 0;      // anchored / anchorless
  double signaling_ratio = 0;  // anchorless / anchored
  double delivery_ratio = 0;   // anchored / anchorless
  std::int64_t handovers = 0;
};

// Paired sweep over config.sizes (or the configured size when empty): both
// schemes in lockstep over identical trajectories and traffic.
std::vector<ComparisonRow> compare_schemes(const ScenarioConfig& c, int threads = 0);

ComparisonRow summarize_comparison(int size, const ScenarioResult& result);

}  // namespace mobisim
