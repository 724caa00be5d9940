#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mobisim/analytic.hpp"
#include "mobisim/messages.hpp"
#include "mobisim/mobility.hpp"
#include "mobisim/topology.hpp"

namespace mobisim {

enum class RunScheme { PMIP, ICN, BOTH };

struct TopologySpec {
  enum class Kind { FIXTURE, RANDOM_GEOMETRIC, INLINE_GRAPH };
  Kind kind = Kind::FIXTURE;
  std::string fixture = "paper-fig5";
  int nodes = 100;
  double mean_degree = 6.0;
  double connection_radius_m = 0.0;  // 0 -> derived from mean_degree
  double area_w_m = 0.0, area_h_m = 0.0;  // 0 -> square tiling n cells
  std::uint64_t seed = 1;
  nlohmann::json inline_graph;
};

struct AnchorSpec {
  enum class Mode { DEFAULT, CENTRAL, ATTACHED_CENTRAL, NODE, ATTACH_TO };
  Mode mode = Mode::DEFAULT;
  NodeId node = 0;
};

struct CnSpec {
  enum class Mode { RANDOM, NODE, ANCHOR, ANCHOR_ADJACENT };
  Mode mode = Mode::RANDOM;
  NodeId node = 0;
};

struct ScenarioConfig {
  TopologySpec topology;
  AnchorSpec anchor;
  CnSpec cn;
  RunScheme scheme = RunScheme::BOTH;
  Convention convention = Convention::WITH_SELF_LOOP;
  DwellModel dwell = DwellModel::EXPONENTIAL;
  int num_mns = 1;
  double speed_lo_mps = mph_to_mps(70.0);
  double speed_hi_mps = mph_to_mps(70.0);
  double cell_radius_m = 500.0;
  TrafficModel traffic;
  double duration_s = 1800.0;  // measured window; warmup runs before it
  double warmup_s = 0.0;
  int replications = 20;
  std::uint64_t seed = 1;
  double latency_p = 1.0;
  double latency_m = 1.0;
  double attachment_delay = 0.0;
  bool uplink = false;
  MessageCatalog catalog;
  std::vector<int> sizes;             // compare: node counts to sweep
  std::vector<double> speed_sweep_mps;  // simulate: per-speed runs when set

  bool fixed_speed() const { return speed_lo_mps == speed_hi_mps; }
};

// Accepts either a scenario config or a run manifest (whose "config" member
// is then used), so any run can be repeated from its manifest.
ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& c);
ScenarioConfig load_scenario(const std::string& path);

// Materializes the configured topology; `nodes_override` substitutes the
// node count for compare sweeps.
TopologyGraph build_topology(const ScenarioConfig& c,
                             std::optional<int> nodes_override = std::nullopt);

// Resolves a fixed correspondent NAP, or nullopt when the config asks for a
// per-mobile random draw.
std::optional<NodeId> resolve_cn(const CnSpec& cn, const TopologyGraph& g);

struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> replication_seeds;
  std::vector<std::string> outputs;
  double runtime_seconds = 0.0;
};

nlohmann::json manifest_to_json(const RunManifest& m);

extern const char* const kToolVersion;

}  // namespace mobisim
