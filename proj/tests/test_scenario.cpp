#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mobisim/report.hpp"
#include "mobisim/sim_engine.hpp"

using namespace mobisim;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("defaults and round trip") {
  nlohmann::json j = {{"topology", {{"fixture", "paper-fig5"}}}};
  auto c = scenario_from_json(j);
  CHECK(c.scheme == RunScheme::BOTH);
  CHECK(c.convention == Convention::WITH_SELF_LOOP);
  CHECK(c.num_mns == 1);
  CHECK(c.duration_s == 1800.0);
  CHECK(c.replications == 20);
  CHECK(c.traffic.packet_rate() == doctest::Approx(122.0703125));
  auto back = scenario_from_json(scenario_to_json(c));
  CHECK(scenario_to_json(back) == scenario_to_json(c));
}

TEST_CASE("full config parses") {
  nlohmann::json j = {
      {"topology", {{"nodes", 40}, {"mean_degree", 7.5}, {"seed", 9}}},
      {"anchor", "central"},
      {"cn_nap", "anchor-adjacent"},
      {"scheme", "icn"},
      {"convention", "without-self-loop"},
      {"dwell", "deterministic"},
      {"num_mns", 5},
      {"speed_mph", nlohmann::json::array({3, 70})},
      {"traffic", {{"bit_rate_bps", 2e6}, {"payload_bytes", 512}}},
      {"duration_s", 60},
      {"warmup_s", 5},
      {"replications", 3},
      {"seed", 1234},
      {"latency", {{"p", 2.0}, {"m", 0.5}}},
      {"uplink", true},
      {"catalog", {{"phi_prime", 128}}},
      {"sizes", {10, 20}},
  };
  auto c = scenario_from_json(j);
  CHECK(c.topology.kind == TopologySpec::Kind::RANDOM_GEOMETRIC);
  CHECK(c.topology.mean_degree == 7.5);
  CHECK(c.anchor.mode == AnchorSpec::Mode::CENTRAL);
  CHECK(c.cn.mode == CnSpec::Mode::ANCHOR_ADJACENT);
  CHECK(c.scheme == RunScheme::ICN);
  CHECK(c.convention == Convention::WITHOUT_SELF_LOOP);
  CHECK(c.speed_lo_mps == doctest::Approx(mph_to_mps(3)));
  CHECK(c.speed_hi_mps == doctest::Approx(mph_to_mps(70)));
  CHECK(c.catalog.payload_bytes == 512);
  CHECK(c.catalog.icn_header_bytes == 128);
  CHECK(c.traffic.payload_bytes == 512);
  CHECK(c.uplink);
  CHECK(c.sizes == std::vector<int>{10, 20});
}

TEST_CASE("invalid configs are rejected") {
  CHECK_THROWS_AS(scenario_from_json(nlohmann::json::object()), SimError);
  CHECK_THROWS_AS(scenario_from_json({{"topology", {{"fixture", "paper-fig5"}}},
                                      {"scheme", "bogus"}}),
                  SimError);
  CHECK_THROWS_AS(scenario_from_json({{"topology", {{"fixture", "paper-fig5"}}},
                                      {"duration_s", -5}}),
                  SimError);
  CHECK_THROWS_AS(scenario_from_json({{"topology", {{"fixture", "paper-fig5"}}},
                                      {"speed_mph", 10},
                                      {"speed_mps", 5}}),
                  SimError);
  CHECK_THROWS_AS(scenario_from_json({{"topology", {{"fixture", "paper-fig5"}}},
                                      {"replications", 0}}),
                  SimError);
}

TEST_CASE("manifest configs load transparently") {
  nlohmann::json config = {{"topology", {{"fixture", "paper-fig5"}}}, {"seed", 77}};
  nlohmann::json manifest = {{"tool", "mobisim"}, {"config", config}};
  auto c = scenario_from_json(manifest);
  CHECK(c.seed == 77);
}

TEST_CASE("topology building honors anchor overrides") {
  ScenarioConfig c;
  c.topology.kind = TopologySpec::Kind::FIXTURE;
  auto g = build_topology(c);
  CHECK(g.node_count == 10);
  CHECK(g.anchor == 9);

  c.anchor.mode = AnchorSpec::Mode::ATTACH_TO;
  c.anchor.node = 2;
  auto g2 = build_topology(c);
  CHECK(g2.has_edge(2, 9));

  ScenarioConfig r;
  r.topology.kind = TopologySpec::Kind::RANDOM_GEOMETRIC;
  r.topology.nodes = 30;
  r.topology.mean_degree = 8.0;
  r.topology.seed = 3;
  auto g3 = build_topology(r);
  CHECK(g3.anchor == central_node(g3));
  r.anchor.mode = AnchorSpec::Mode::ATTACHED_CENTRAL;
  auto g4 = build_topology(r);
  CHECK(g4.node_count == 31);
  CHECK(g4.anchor == 30);
  r.anchor.mode = AnchorSpec::Mode::NODE;
  r.anchor.node = 7;
  CHECK(build_topology(r).anchor == 7);

  auto g5 = build_topology(r, 40);
  CHECK(g5.node_count == 40);
}

TEST_CASE("cn resolution") {
  auto g = fixture_paper_topology();
  CnSpec random;
  CHECK_FALSE(resolve_cn(random, g).has_value());
  CnSpec fixed{CnSpec::Mode::NODE, 3};
  CHECK(resolve_cn(fixed, g) == 3);
  CnSpec anchor{CnSpec::Mode::ANCHOR, 0};
  CHECK(resolve_cn(anchor, g) == g.anchor);
  CnSpec adj{CnSpec::Mode::ANCHOR_ADJACENT, 0};
  CHECK(resolve_cn(adj, g) == 5);  // the anchor hangs off AP6
}

TEST_CASE("analytic report identities") {
  ScenarioConfig c;
  c.topology.kind = TopologySpec::Kind::FIXTURE;
  c.cn.mode = CnSpec::Mode::NODE;
  c.cn.node = 3;
  auto ctx = ScenarioContext::build(c);
  auto pmip = analytic_report(Scheme::PMIP, c, ctx);
  auto icn = analytic_report(Scheme::ICN, c, ctx);
  CHECK(pmip.total() == pmip.signaling + pmip.delivery);
  CHECK(icn.total() == icn.signaling + icn.delivery);
  CHECK(pmip.signaling > 0);
  CHECK(icn.delivery > 0);
  double mass = 0;
  for (auto [v, p] : pmip.latency) mass += p;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));

  c.speed_lo_mps = 1.0;
  c.speed_hi_mps = 2.0;
  CHECK_THROWS_AS(analytic_report(Scheme::PMIP, c, ctx), SimError);
}

TEST_CASE("output files are a pure function of the scenario") {
  ScenarioConfig c;
  c.topology.kind = TopologySpec::Kind::FIXTURE;
  c.cn.mode = CnSpec::Mode::NODE;
  c.cn.node = 3;
  c.num_mns = 2;
  c.duration_s = 120.0;
  c.replications = 2;
  c.seed = 5;

  const auto base = std::filesystem::temp_directory_path() / "mobisim_test_out";
  std::filesystem::remove_all(base);
  const auto d1 = (base / "a").string(), d2 = (base / "b").string();

  auto r1 = run_scenario(c, 1);
  auto files1 = write_simulation_outputs(d1, c, r1);
  auto r2 = run_scenario(c, 4);
  auto files2 = write_simulation_outputs(d2, c, r2);
  REQUIRE(files1 == files2);
  for (const auto& name : files1)
    CHECK(slurp(std::filesystem::path(d1) / name) ==
          slurp(std::filesystem::path(d2) / name));

  auto ctx = ScenarioContext::build(c);
  auto a1 = write_analytic_outputs(d1, c, ctx);
  auto a2 = write_analytic_outputs(d2, c, ctx);
  for (const auto& name : a1)
    CHECK(slurp(std::filesystem::path(d1) / name) ==
          slurp(std::filesystem::path(d2) / name));
  std::filesystem::remove_all(base);
}

TEST_CASE("simulation csv has the documented columns") {
  ScenarioConfig c;
  c.topology.kind = TopologySpec::Kind::FIXTURE;
  c.num_mns = 1;
  c.duration_s = 60.0;
  c.replications = 1;
  const auto dir = std::filesystem::temp_directory_path() / "mobisim_test_cols";
  std::filesystem::remove_all(dir);
  auto result = run_scenario(c, 1);
  write_simulation_outputs(dir.string(), c, result);
  const std::string reps = slurp(dir / "replications.csv");
  CHECK(reps.rfind("replication,scheme,signaling_hb,delivery_hb,total_hb,handovers,"
                   "mean_latency\n", 0) == 0);
  CHECK(slurp(dir / "summary.csv")
            .rfind("scheme,metric,n,mean,sample_std,ci95_low,ci95_high\n", 0) == 0);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
