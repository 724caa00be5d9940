#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "mobisim/report.hpp"
#include "mobisim/sim_engine.hpp"

using namespace mobisim;

namespace {

ScenarioConfig small_fixture_config() {
  ScenarioConfig c;
  c.topology.kind = TopologySpec::Kind::FIXTURE;
  c.topology.fixture = "paper-fig5";
  c.cn.mode = CnSpec::Mode::NODE;
  c.cn.node = 3;
  c.num_mns = 1;
  c.duration_s = 300.0;
  c.replications = 2;
  c.seed = 11;
  return c;
}

bool totals_equal(const SchemeTotals& a, const SchemeTotals& b) {
  return a.signaling_hb == b.signaling_hb && a.delivery_hb == b.delivery_hb &&
         a.handovers == b.handovers && a.latency_samples == b.latency_samples;
}

}  // namespace

TEST_SUITE("sim_engine") {

TEST_CASE("no mobiles, no costs") {
  auto c = small_fixture_config();
  c.num_mns = 0;
  auto ctx = ScenarioContext::build(c);
  auto rep = run_replication(c, ctx, 0);
  CHECK(rep.pmip->signaling_hb == 0);
  CHECK(rep.pmip->delivery_hb == 0);
  CHECK(rep.icn->delivery_hb == 0);
}

TEST_CASE("vanishing speed: no signaling, delivery still flows") {
  auto c = small_fixture_config();
  c.speed_lo_mps = c.speed_hi_mps = 1e-7;
  c.duration_s = 50.0;
  auto ctx = ScenarioContext::build(c);
  auto rep = run_replication(c, ctx, 0);
  CHECK(rep.pmip->signaling_hb == 0);
  CHECK(rep.pmip->handovers == 0);
  CHECK(rep.pmip->delivery_hb > 0);
  CHECK(rep.icn->signaling_hb == 0);
}

TEST_CASE("replications are deterministic and distinct") {
  auto c = small_fixture_config();
  auto ctx = ScenarioContext::build(c);
  auto a = run_replication(c, ctx, 0);
  auto b = run_replication(c, ctx, 0);
  CHECK(totals_equal(*a.pmip, *b.pmip));
  CHECK(totals_equal(*a.icn, *b.icn));
  auto other = run_replication(c, ctx, 1);
  CHECK_FALSE(totals_equal(*a.pmip, *other.pmip));
}

TEST_CASE("single-scheme runs reproduce the paired run exactly") {
  auto c = small_fixture_config();
  auto ctx = ScenarioContext::build(c);
  auto both = run_replication(c, ctx, 0);

  auto cp = c;
  cp.scheme = RunScheme::PMIP;
  auto pm = run_replication(cp, ctx, 0);
  REQUIRE(pm.pmip);
  CHECK_FALSE(pm.icn);
  CHECK(totals_equal(*both.pmip, *pm.pmip));

  auto ci = c;
  ci.scheme = RunScheme::ICN;
  auto ic = run_replication(ci, ctx, 0);
  CHECK(totals_equal(*both.icn, *ic.icn));
}

TEST_CASE("paired schemes share trajectories") {
  auto c = small_fixture_config();
  c.num_mns = 4;
  c.replications = 3;
  auto result = run_scenario(c, 1);
  for (const auto& rep : result.replications)
    CHECK(rep.pmip->handovers == rep.icn->handovers);
}

TEST_CASE("thread count does not change results") {
  auto c = small_fixture_config();
  c.replications = 4;
  auto serial = run_scenario(c, 1);
  auto parallel = run_scenario(c, 4);
  for (int r = 0; r < 4; ++r) {
    CHECK(totals_equal(*serial.replications[r].pmip, *parallel.replications[r].pmip));
    CHECK(totals_equal(*serial.replications[r].icn, *parallel.replications[r].icn));
  }
}

TEST_CASE("environment variable caps the worker count") {
  setenv("MOBISIM_THREADS", "2", 1);
  CHECK(effective_thread_count(8, 100) == 2);
  unsetenv("MOBISIM_THREADS");
  CHECK(effective_thread_count(8, 100) == 8);
  CHECK(effective_thread_count(8, 3) == 3);
}

TEST_CASE("doubling the bit rate doubles delivery cost within noise") {
  auto c = small_fixture_config();
  c.duration_s = 400.0;
  auto ctx = ScenarioContext::build(c);
  auto base = run_replication(c, ctx, 0);
  auto c2 = c;
  c2.traffic.bit_rate_bps *= 2;
  auto doubled = run_replication(c2, ctx, 0);
  // same trajectory stream; arrivals resample, so the match is statistical
  CHECK(doubled.pmip->signaling_hb == base.pmip->signaling_hb);
  const double ratio = static_cast<double>(doubled.pmip->delivery_hb) /
                       static_cast<double>(base.pmip->delivery_hb);
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("handover count stays within 3 sigma of the stationary rate") {
  auto c = small_fixture_config();
  c.duration_s = 2000.0;
  c.replications = 1;
  auto ctx = ScenarioContext::build(c);
  const double mu = mobility_rate(c.speed_lo_mps, c.cell_radius_m).mu;
  const Eigen::VectorXd pi = stationary(ctx.direction);
  double move_rate = 0;  // mu * sum_k pi_k * d_k/(d_k+1) under self loops
  for (int k = 0; k < ctx.direction.size(); ++k) {
    const int d = ctx.direction.mobile_degree(k);
    move_rate += pi(k) * mu * d / (d + 1.0);
  }
  const double expected = move_rate * c.duration_s;
  auto rep = run_replication(c, ctx, 0);
  CHECK(std::abs(rep.pmip->handovers - expected) <= 3.0 * std::sqrt(expected));
}

TEST_CASE("warmup shifts the measured window") {
  auto c = small_fixture_config();
  c.duration_s = 200.0;
  c.warmup_s = 100.0;
  auto ctx = ScenarioContext::build(c);
  auto rep = run_replication(c, ctx, 0);
  CHECK(rep.pmip->delivery_hb > 0);
  // all events processed cover warmup + duration
  CHECK(rep.packet_events > 0);
}

TEST_CASE("simulated signaling approaches the closed form over long runs") {
  auto c = small_fixture_config();
  c.duration_s = 1500.0;
  c.warmup_s = 100.0;
  c.replications = 8;
  c.seed = 21;
  auto result = run_scenario(c, 0);
  const double mu = mobility_rate(c.speed_lo_mps, c.cell_radius_m).mu;
  const Eigen::VectorXd pi = stationary(result.context.direction);
  const double y = pmip_signaling(result.context.direction, pi, result.context.hops,
                                  result.context.graph.anchor, mu, c.catalog);
  double mean = 0;
  for (const auto& rep : result.replications)
    mean += static_cast<double>(rep.pmip->signaling_hb) / c.replications;
  CHECK(mean / c.duration_s == doctest::Approx(y).epsilon(0.15));
}

TEST_CASE("comparison rows carry consistent ratios") {
  auto c = small_fixture_config();
  c.num_mns = 2;
  c.duration_s = 200.0;
  auto rows = compare_schemes(c, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].size == 10);
  CHECK(rows[0].pmip_total_hb ==
        doctest::Approx(rows[0].pmip_signaling_hb + rows[0].pmip_delivery_hb));
  CHECK(rows[0].total_ratio > 0);
  auto again = compare_schemes(c, 1);
  CHECK(rows[0].total_ratio == again[0].total_ratio);

  auto bad = c;
  bad.scheme = RunScheme::PMIP;
  CHECK_THROWS_AS(compare_schemes(bad, 1), SimError);
}

TEST_CASE("comparison sweeps sizes on geometric topologies") {
  ScenarioConfig c;
  c.topology.kind = TopologySpec::Kind::RANDOM_GEOMETRIC;
  c.topology.nodes = 0;  // unused: sizes drive the sweep
  c.topology.mean_degree = 8.0;
  c.topology.seed = 17;
  c.anchor.mode = AnchorSpec::Mode::CENTRAL;
  c.num_mns = 2;
  c.duration_s = 60.0;
  c.replications = 2;
  c.sizes = {20, 30};
  auto rows = compare_schemes(c, 0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].size == 20);
  CHECK(rows[1].size == 30);
  for (const auto& row : rows) {
    CHECK(row.pmip_delivery_hb > 0);
    CHECK(row.icn_delivery_hb > 0);
    CHECK(row.delivery_ratio > 1.0);     // anchored detour always costs hops
    CHECK(row.signaling_ratio > 1.0);    // pub/sub signaling is heavier
  }
}

}  // TEST_SUITE
