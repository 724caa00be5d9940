#include "mobisim/sim_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <queue>
#include <thread>

#include "mobisim/errors.hpp"
#include "mobisim/ipoicn.hpp"
#include "mobisim/pmipv6.hpp"

namespace mobisim {

double SchemeTotals::mean_latency() const {
  if (latency_samples.empty()) return 0.0;
  double sum = 0.0;
  for (double v : latency_samples) sum += v;
  return sum / static_cast<double>(latency_samples.size());
}

ScenarioContext ScenarioContext::build(const ScenarioConfig& c,
                                       std::optional<int> nodes_override) {
  ScenarioContext ctx;
  ctx.graph = build_topology(c, nodes_override);
  ctx.hops = hop_counts(ctx.graph);
  ctx.direction = direction_matrix(ctx.graph, c.convention);
  return ctx;
}

std::uint64_t replication_seed(const ScenarioConfig& c, int replication) {
  return derive_seed(c.seed, static_cast<std::uint64_t>(replication), 0x5e9);
}

namespace {

// per-(mobile, purpose) stream salts
enum Purpose : std::uint64_t { PLACEMENT = 0, MOBILITY = 1, TRAFFIC = 2 };

struct SimEvent {
  double time;
  int kind;  // 0 = MOVE, 1 = PACKET
  int mn;
  std::uint64_t seq;
  bool operator>(const SimEvent& o) const {
    if (time != o.time) return time > o.time;
    if (kind != o.kind) return kind > o.kind;
    return seq > o.seq;
  }
};

struct MobileState {
  NodeId node = 0;
  NodeId cn_nap = 0;
  double mu = 0.0;
  RngStream mobility{0};
  RngStream traffic{0};
};

ScopeId mn_scope_of(int mn) {
  return scope_id("10.0.0.0-16", "10.0." + std::to_string(mn / 250) + "." +
                                     std::to_string(mn % 250 + 1));
}

ScopeId cn_scope_of(int mn) {
  return scope_id("10.1.0.0-16", "10.1." + std::to_string(mn / 250) + "." +
                                     std::to_string(mn % 250 + 1));
}

}  // namespace

ReplicationResult run_replication(const ScenarioConfig& c, const ScenarioContext& ctx,
                                  int replication) {
  ReplicationResult result;
  result.replication = replication;
  const bool with_pmip = c.scheme != RunScheme::ICN;
  const bool with_icn = c.scheme != RunScheme::PMIP;
  if (with_pmip) result.pmip.emplace();
  if (with_icn) result.icn.emplace();
  if (c.num_mns == 0) return result;

  const TopologyGraph& g = ctx.graph;
  const Eigen::MatrixXi& hops = ctx.hops;
  const DirectionMatrix& P = ctx.direction;
  const std::uint64_t rep_seed = replication_seed(c, replication);
  const std::optional<NodeId> fixed_cn = resolve_cn(c.cn, g);
  const NodeId rv = g.anchor;

  PmipDomain pmip(g, hops, c.catalog);
  IcnDomain icn(g, hops, c.catalog, rv);

  std::vector<MobileState> mobiles(c.num_mns);
  std::priority_queue<SimEvent, std::vector<SimEvent>, std::greater<SimEvent>> queue;
  std::uint64_t seq = 0;
  const double t_end = c.warmup_s + c.duration_s;
  const bool with_traffic = c.traffic.bit_rate_bps > 0;
  const double packet_rate = with_traffic ? c.traffic.packet_rate() : 0.0;
  const int walk_count = static_cast<int>(g.walk_nodes.size());

  for (int mn = 0; mn < c.num_mns; ++mn) {
    MobileState& m = mobiles[mn];
    RngStream placement(derive_seed(rep_seed, mn, PLACEMENT));
    m.node = g.walk_nodes[placement.bounded(walk_count)];
    const double speed = c.fixed_speed()
                             ? c.speed_lo_mps
                             : placement.uniform(c.speed_lo_mps, c.speed_hi_mps);
    m.mu = mobility_rate(speed, c.cell_radius_m).mu;
    m.cn_nap = fixed_cn ? *fixed_cn : g.walk_nodes[placement.bounded(walk_count)];
    m.mobility = RngStream(derive_seed(rep_seed, mn, MOBILITY));
    m.traffic = RngStream(derive_seed(rep_seed, mn, TRAFFIC));

    // t = 0 state setup; establishment signaling is not part of the
    // per-handover cost model and is not accumulated.
    if (with_pmip) pmip.attach(mn, m.node);
    if (with_icn) {
      icn.subscribe(cn_scope_of(mn), m.cn_nap);
      icn.session_establish(mn, m.node, mn_scope_of(mn), cn_scope_of(mn));
    }

    queue.push({m.mobility.exponential(m.mu), 0, mn, seq++});
    if (with_traffic) queue.push({m.traffic.exponential(packet_rate), 1, mn, seq++});
  }

  double now = 0.0;
  const auto dwell_of = [&](MobileState& m) {
    return c.dwell == DwellModel::EXPONENTIAL ? m.mobility.exponential(m.mu)
                                              : 1.0 / m.mu;
  };

  while (!queue.empty()) {
    const SimEvent ev = queue.top();
    queue.pop();
    if (ev.time >= t_end) break;
    require(ev.time >= now, Errc::ConfigInvalid, "event queue went backwards");
    now = ev.time;
    const bool measured = now >= c.warmup_s;
    MobileState& m = mobiles[ev.mn];

    if (ev.kind == 0) {  // MOVE
      ++result.move_events;
      const int row = P.row(m.node);
      const int deg = P.mobile_degree(row);
      bool moved = false;
      NodeId next = m.node;
      if (deg > 0) {
        if (c.convention == Convention::WITH_SELF_LOOP) {
          const auto pick = m.mobility.bounded(deg + 1);
          if (pick < static_cast<std::uint64_t>(deg)) {
            next = P.nodes[P.move_rows[row][pick]];
            moved = true;
          }
        } else {
          next = P.nodes[P.move_rows[row][m.mobility.bounded(deg)]];
          moved = true;
        }
      }
      if (moved) {
        const NodeId from = m.node;
        if (with_pmip) {
          const HandoverTrace trace = pmip.handover(ev.mn, next);
          if (measured) {
            result.pmip->signaling_hb += trace.control_cost();
            ++result.pmip->handovers;
            result.pmip->latency_samples.push_back(
                pmip_handover_latency(hops, g.anchor, from, next, c.latency_p,
                                      c.latency_m) +
                c.attachment_delay);
          }
        }
        if (with_icn) {
          const HandoverTrace trace = icn.handover(ev.mn, next);
          if (measured) {
            result.icn->signaling_hb += trace.control_cost();
            ++result.icn->handovers;
            result.icn->latency_samples.push_back(
                icn_handover_latency(hops, rv, m.cn_nap, from, next, c.latency_p,
                                     c.latency_m) +
                c.attachment_delay);
          }
        }
        m.node = next;
      }
      queue.push({now + dwell_of(m), 0, ev.mn, seq++});
    } else {  // PACKET, downlink CN -> MN
      ++result.packet_events;
      if (measured) {
        const std::int64_t directions = c.uplink ? 2 : 1;
        if (with_pmip)
          result.pmip->delivery_hb += directions * pmip.delivery_cost(m.cn_nap, ev.mn);
        if (with_icn)
          result.icn->delivery_hb += directions * icn.delivery_cost(ev.mn);
      }
      queue.push({now + m.traffic.exponential(packet_rate), 1, ev.mn, seq++});
    }
  }
  return result;
}

int effective_thread_count(int requested, int replications) {
  int threads = requested;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (const char* env = std::getenv("MOBISIM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  return std::max(1, std::min(threads, replications));
}

ScenarioResult run_scenario(const ScenarioConfig& c, int threads,
                            std::optional<int> nodes_override) {
  ScenarioResult result;
  result.context = ScenarioContext::build(c, nodes_override);
  result.replications.resize(c.replications);
  const int workers = effective_thread_count(threads, c.replications);
  if (workers == 1) {
    for (int r = 0; r < c.replications; ++r)
      result.replications[r] = run_replication(c, result.context, r);
    return result;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int r = next.fetch_add(1);
        if (r >= c.replications) return;
        result.replications[r] = run_replication(c, result.context, r);
      }
    });
  }
  for (auto& t : pool) t.join();
  return result;
}

ComparisonRow summarize_comparison(int size, const ScenarioResult& result) {
  ComparisonRow row;
  row.size = size;
  const double n = static_cast<double>(result.replications.size());
  for (const auto& rep : result.replications) {
    require(rep.pmip && rep.icn, Errc::ConfigInvalid,
            "comparison needs both schemes per replication");
    require(rep.pmip->handovers == rep.icn->handovers, Errc::ConfigInvalid,
            "paired replication diverged between schemes");
    row.pmip_signaling_hb += static_cast<double>(rep.pmip->signaling_hb) / n;
    row.pmip_delivery_hb += static_cast<double>(rep.pmip->delivery_hb) / n;
    row.icn_signaling_hb += static_cast<double>(rep.icn->signaling_hb) / n;
    row.icn_delivery_hb += static_cast<double>(rep.icn->delivery_hb) / n;
    row.handovers += rep.pmip->handovers;
  }
  row.pmip_total_hb = row.pmip_signaling_hb + row.pmip_delivery_hb;
  row.icn_total_hb = row.icn_signaling_hb + row.icn_delivery_hb;
  if (row.icn_total_hb > 0) row.total_ratio = row.pmip_total_hb / row.icn_total_hb;
  if (row.pmip_signaling_hb > 0)
    row.signaling_ratio = row.icn_signaling_hb / row.pmip_signaling_hb;
  if (row.icn_delivery_hb > 0)
    row.delivery_ratio = row.pmip_delivery_hb / row.icn_delivery_hb;
  return row;
}

std::vector<ComparisonRow> compare_schemes(const ScenarioConfig& c, int threads) {
  require(c.scheme == RunScheme::BOTH, Errc::ConfigInvalid,
          "compare requires scheme=both");
  std::vector<ComparisonRow> rows;
  if (c.sizes.empty()) {
    const ScenarioResult result = run_scenario(c, threads);
    rows.push_back(summarize_comparison(result.context.graph.node_count, result));
    return rows;
  }
  rows.reserve(c.sizes.size());
  for (int size : c.sizes) {
    const ScenarioResult result = run_scenario(c, threads, size);
    rows.push_back(summarize_comparison(size, result));
  }
  return rows;
}

}  // namespace mobisim
