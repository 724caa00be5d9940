#include "mobisim/scenario.hpp"

#include <fstream>

#include "mobisim/errors.hpp"

namespace mobisim {

const char* const kToolVersion = "0.1.0";

namespace {

RunScheme scheme_from_string(const std::string& s) {
  if (s == "pmip") return RunScheme::PMIP;
  if (s == "icn") return RunScheme::ICN;
  if (s == "both") return RunScheme::BOTH;
  fail(Errc::ConfigInvalid, "unknown scheme '" + s + "'");
}

std::string scheme_to_string(RunScheme s) {
  switch (s) {
    case RunScheme::PMIP: return "pmip";
    case RunScheme::ICN: return "icn";
    case RunScheme::BOTH: return "both";
  }
  return "?";
}

TopologySpec topology_from_json(const nlohmann::json& j) {
  TopologySpec t;
  require(j.is_object(), Errc::ConfigInvalid, "'topology' must be an object");
  if (j.contains("fixture")) {
    t.kind = TopologySpec::Kind::FIXTURE;
    t.fixture = j.at("fixture").get<std::string>();
  } else if (j.contains("graph")) {
    t.kind = TopologySpec::Kind::INLINE_GRAPH;
    t.inline_graph = j.at("graph");
  } else if (j.contains("nodes")) {
    t.kind = TopologySpec::Kind::RANDOM_GEOMETRIC;
    t.nodes = j.at("nodes").get<int>();
    if (j.contains("mean_degree")) t.mean_degree = j.at("mean_degree").get<double>();
    if (j.contains("connection_radius_m"))
      t.connection_radius_m = j.at("connection_radius_m").get<double>();
    if (j.contains("area_m")) {
      t.area_w_m = j.at("area_m").at(0).get<double>();
      t.area_h_m = j.at("area_m").at(1).get<double>();
    }
    if (j.contains("seed")) t.seed = j.at("seed").get<std::uint64_t>();
  } else {
    fail(Errc::ConfigInvalid, "'topology' needs 'fixture', 'graph' or 'nodes'");
  }
  return t;
}

nlohmann::json topology_to_json(const TopologySpec& t) {
  nlohmann::json j;
  switch (t.kind) {
    case TopologySpec::Kind::FIXTURE:
      j["fixture"] = t.fixture;
      break;
    case TopologySpec::Kind::INLINE_GRAPH:
      j["graph"] = t.inline_graph;
      break;
    case TopologySpec::Kind::RANDOM_GEOMETRIC:
      j["nodes"] = t.nodes;
      j["mean_degree"] = t.mean_degree;
      if (t.connection_radius_m > 0) j["connection_radius_m"] = t.connection_radius_m;
      if (t.area_w_m > 0) j["area_m"] = {t.area_w_m, t.area_h_m};
      j["seed"] = t.seed;
      break;
  }
  return j;
}

AnchorSpec anchor_from_json(const nlohmann::json& j) {
  AnchorSpec a;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "central") a.mode = AnchorSpec::Mode::CENTRAL;
    else if (s == "attached-central") a.mode = AnchorSpec::Mode::ATTACHED_CENTRAL;
    else if (s == "default") a.mode = AnchorSpec::Mode::DEFAULT;
    else fail(Errc::ConfigInvalid, "unknown anchor mode '" + s + "'");
  } else if (j.is_object() && j.contains("node")) {
    a.mode = AnchorSpec::Mode::NODE;
    a.node = j.at("node").get<NodeId>();
  } else if (j.is_object() && j.contains("attach_to")) {
    a.mode = AnchorSpec::Mode::ATTACH_TO;
    a.node = j.at("attach_to").get<NodeId>();
  } else {
    fail(Errc::ConfigInvalid, "'anchor' must be a mode string or {node}/{attach_to}");
  }
  return a;
}

nlohmann::json anchor_to_json(const AnchorSpec& a) {
  switch (a.mode) {
    case AnchorSpec::Mode::DEFAULT: return "default";
    case AnchorSpec::Mode::CENTRAL: return "central";
    case AnchorSpec::Mode::ATTACHED_CENTRAL: return "attached-central";
    case AnchorSpec::Mode::NODE: return nlohmann::json{{"node", a.node}};
    case AnchorSpec::Mode::ATTACH_TO: return nlohmann::json{{"attach_to", a.node}};
  }
  return "default";
}

CnSpec cn_from_json(const nlohmann::json& j) {
  CnSpec c;
  if (j.is_number_integer()) {
    c.mode = CnSpec::Mode::NODE;
    c.node = j.get<NodeId>();
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "random") c.mode = CnSpec::Mode::RANDOM;
    else if (s == "anchor") c.mode = CnSpec::Mode::ANCHOR;
    else if (s == "anchor-adjacent") c.mode = CnSpec::Mode::ANCHOR_ADJACENT;
    else fail(Errc::ConfigInvalid, "unknown cn_nap mode '" + s + "'");
  } else {
    fail(Errc::ConfigInvalid, "'cn_nap' must be a node id or a mode string");
  }
  return c;
}

nlohmann::json cn_to_json(const CnSpec& c) {
  switch (c.mode) {
    case CnSpec::Mode::RANDOM: return "random";
    case CnSpec::Mode::ANCHOR: return "anchor";
    case CnSpec::Mode::ANCHOR_ADJACENT: return "anchor-adjacent";
    case CnSpec::Mode::NODE: return c.node;
  }
  return "random";
}

}  // namespace

ScenarioConfig scenario_from_json(const nlohmann::json& in) {
  const nlohmann::json& j = in.contains("config") ? in.at("config") : in;
  ScenarioConfig c;
  require(j.is_object(), Errc::ConfigInvalid, "config must be a JSON object");
  require(j.contains("topology"), Errc::ConfigInvalid, "config needs 'topology'");
  c.topology = topology_from_json(j.at("topology"));
  if (j.contains("anchor")) c.anchor = anchor_from_json(j.at("anchor"));
  if (j.contains("cn_nap")) c.cn = cn_from_json(j.at("cn_nap"));
  if (j.contains("scheme")) c.scheme = scheme_from_string(j.at("scheme").get<std::string>());
  if (j.contains("convention")) {
    const auto s = j.at("convention").get<std::string>();
    if (s == "with-self-loop") c.convention = Convention::WITH_SELF_LOOP;
    else if (s == "without-self-loop") c.convention = Convention::WITHOUT_SELF_LOOP;
    else fail(Errc::ConfigInvalid, "unknown convention '" + s + "'");
  }
  if (j.contains("dwell")) {
    const auto s = j.at("dwell").get<std::string>();
    if (s == "exponential") c.dwell = DwellModel::EXPONENTIAL;
    else if (s == "deterministic") c.dwell = DwellModel::DETERMINISTIC;
    else fail(Errc::ConfigInvalid, "unknown dwell model '" + s + "'");
  }
  if (j.contains("num_mns")) c.num_mns = j.at("num_mns").get<int>();
  require(c.num_mns >= 0, Errc::ConfigInvalid, "num_mns must be >= 0");
  require(!(j.contains("speed_mph") && j.contains("speed_mps")), Errc::ConfigInvalid,
          "give speed_mph or speed_mps, not both");
  auto read_speed = [&](const char* key, double to_mps) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (v.is_array()) {
      c.speed_lo_mps = v.at(0).get<double>() * to_mps;
      c.speed_hi_mps = v.at(1).get<double>() * to_mps;
    } else {
      c.speed_lo_mps = c.speed_hi_mps = v.get<double>() * to_mps;
    }
  };
  read_speed("speed_mph", kMetersPerMile / 3600.0);
  read_speed("speed_mps", 1.0);
  require(c.speed_lo_mps > 0 && c.speed_hi_mps >= c.speed_lo_mps, Errc::ConfigInvalid,
          "speeds must be positive and ordered");
  if (j.contains("cell_radius_m")) c.cell_radius_m = j.at("cell_radius_m").get<double>();
  require(c.cell_radius_m > 0, Errc::ConfigInvalid, "cell_radius_m must be > 0");
  if (j.contains("catalog")) c.catalog = catalog_from_json(j.at("catalog"));
  if (j.contains("traffic")) {
    const auto& t = j.at("traffic");
    if (t.contains("bit_rate_bps")) c.traffic.bit_rate_bps = t.at("bit_rate_bps").get<double>();
    if (t.contains("payload_bytes")) c.catalog.payload_bytes = t.at("payload_bytes").get<int>();
  }
  c.traffic.payload_bytes = c.catalog.payload_bytes;
  require(c.traffic.bit_rate_bps >= 0, Errc::ConfigInvalid, "bit rate must be >= 0");
  if (j.contains("duration_s")) c.duration_s = j.at("duration_s").get<double>();
  require(c.duration_s > 0, Errc::ConfigInvalid, "duration_s must be > 0");
  if (j.contains("warmup_s")) c.warmup_s = j.at("warmup_s").get<double>();
  require(c.warmup_s >= 0, Errc::ConfigInvalid, "warmup_s must be >= 0");
  if (j.contains("replications")) c.replications = j.at("replications").get<int>();
  require(c.replications >= 1, Errc::ConfigInvalid, "replications must be >= 1");
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("latency")) {
    c.latency_p = j.at("latency").value("p", 1.0);
    c.latency_m = j.at("latency").value("m", 1.0);
  }
  require(c.latency_p > 0 && c.latency_m > 0, Errc::ConfigInvalid,
          "latency units must be > 0");
  if (j.contains("attachment_delay")) c.attachment_delay = j.at("attachment_delay").get<double>();
  require(c.attachment_delay >= 0, Errc::ConfigInvalid, "attachment_delay must be >= 0");
  if (j.contains("uplink")) c.uplink = j.at("uplink").get<bool>();
  if (j.contains("sizes")) {
    c.sizes = j.at("sizes").get<std::vector<int>>();
    for (int n : c.sizes)
      require(n >= 2, Errc::ConfigInvalid, "compare sizes must be >= 2");
  }
  if (j.contains("speed_sweep_mph")) {
    for (double v : j.at("speed_sweep_mph").get<std::vector<double>>()) {
      require(v > 0, Errc::ConfigInvalid, "sweep speeds must be > 0");
      c.speed_sweep_mps.push_back(mph_to_mps(v));
    }
  }
  return c;
}

nlohmann::json scenario_to_json(const ScenarioConfig& c) {
  nlohmann::json j;
  j["topology"] = topology_to_json(c.topology);
  j["anchor"] = anchor_to_json(c.anchor);
  j["cn_nap"] = cn_to_json(c.cn);
  j["scheme"] = scheme_to_string(c.scheme);
  j["convention"] = c.convention == Convention::WITH_SELF_LOOP ? "with-self-loop"
                                                               : "without-self-loop";
  j["dwell"] = c.dwell == DwellModel::EXPONENTIAL ? "exponential" : "deterministic";
  j["num_mns"] = c.num_mns;
  if (c.fixed_speed())
    j["speed_mps"] = c.speed_lo_mps;
  else
    j["speed_mps"] = {c.speed_lo_mps, c.speed_hi_mps};
  j["cell_radius_m"] = c.cell_radius_m;
  j["traffic"] = {{"bit_rate_bps", c.traffic.bit_rate_bps},
                  {"payload_bytes", c.traffic.payload_bytes}};
  j["duration_s"] = c.duration_s;
  j["warmup_s"] = c.warmup_s;
  j["replications"] = c.replications;
  j["seed"] = c.seed;
  j["latency"] = {{"p", c.latency_p}, {"m", c.latency_m}};
  j["attachment_delay"] = c.attachment_delay;
  j["uplink"] = c.uplink;
  j["catalog"] = catalog_to_json(c.catalog);
  if (!c.sizes.empty()) j["sizes"] = c.sizes;
  if (!c.speed_sweep_mps.empty()) {
    std::vector<double> mph;
    for (double v : c.speed_sweep_mps) mph.push_back(v * 3600.0 / kMetersPerMile);
    j["speed_sweep_mph"] = mph;
  }
  return j;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::IoError, "cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ConfigInvalid, "bad JSON in '" + path + "': " + e.what());
  }
  return scenario_from_json(j);
}

TopologyGraph build_topology(const ScenarioConfig& c, std::optional<int> nodes_override) {
  TopologyGraph g;
  switch (c.topology.kind) {
    case TopologySpec::Kind::FIXTURE:
      if (c.topology.fixture == "paper-fig5" &&
          c.anchor.mode == AnchorSpec::Mode::ATTACH_TO)
        return fixture_paper_topology(c.anchor.node);
      g = fixture_by_name(c.topology.fixture);
      break;
    case TopologySpec::Kind::INLINE_GRAPH:
      g = graph_from_json(c.topology.inline_graph);
      break;
    case TopologySpec::Kind::RANDOM_GEOMETRIC: {
      const int n = nodes_override.value_or(c.topology.nodes);
      double w = c.topology.area_w_m, h = c.topology.area_h_m;
      if (w <= 0 || h <= 0) {
        const double side = 2.0 * c.cell_radius_m * std::sqrt(static_cast<double>(n));
        w = h = side;
      }
      double radius = c.topology.connection_radius_m;
      if (radius <= 0) radius = radius_for_mean_degree(n, c.topology.mean_degree, w, h);
      g = random_geometric(n, radius, w, h, c.topology.seed, c.cell_radius_m);
      break;
    }
  }
  switch (c.anchor.mode) {
    case AnchorSpec::Mode::DEFAULT:
      break;  // fixture's builtin anchor / generator's central node
    case AnchorSpec::Mode::CENTRAL:
      g = with_anchor(g, central_node(g));
      break;
    case AnchorSpec::Mode::ATTACHED_CENTRAL:
      g = attach_anchor_node(g, central_node(g));
      break;
    case AnchorSpec::Mode::NODE:
      g = with_anchor(g, c.anchor.node);
      break;
    case AnchorSpec::Mode::ATTACH_TO:
      if (c.topology.kind != TopologySpec::Kind::FIXTURE)
        g = attach_anchor_node(g, c.anchor.node);
      break;
  }
  return g;
}

std::optional<NodeId> resolve_cn(const CnSpec& cn, const TopologyGraph& g) {
  switch (cn.mode) {
    case CnSpec::Mode::RANDOM:
      return std::nullopt;
    case CnSpec::Mode::NODE:
      require(cn.node >= 0 && cn.node < g.node_count, Errc::ConfigInvalid,
              "cn_nap outside node range");
      return cn.node;
    case CnSpec::Mode::ANCHOR:
      return g.anchor;
    case CnSpec::Mode::ANCHOR_ADJACENT:
      require(!g.neighbors(g.anchor).empty(), Errc::ConfigInvalid,
              "anchor has no neighbor");
      return g.neighbors(g.anchor).front();
  }
  return std::nullopt;
}

nlohmann::json manifest_to_json(const RunManifest& m) {
  nlohmann::json j;
  j["tool"] = "mobisim";
  j["version"] = kToolVersion;
  j["command"] = m.command;
  j["config"] = m.config;
  j["base_seed"] = m.base_seed;
  j["replication_seeds"] = m.replication_seeds;
  j["outputs"] = m.outputs;
  j["runtime_seconds"] = m.runtime_seconds;
  return j;
}

}  // namespace mobisim
