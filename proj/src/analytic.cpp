#include "mobisim/analytic.hpp"

#include <algorithm>
#include <map>

#include "mobisim/errors.hpp"

namespace mobisim {

namespace {

void check_dims(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                const Eigen::MatrixXi& hops) {
  require(pi.size() == P.size(), Errc::DimensionMismatch,
          "stationary vector does not match direction matrix");
  for (NodeId k : P.nodes)
    require(k >= 0 && k < hops.rows(), Errc::DimensionMismatch,
            "walk node outside hop matrix");
}

// Sum over stationary moves of weight pi_k p_(k,j) mu times a per-move term.
template <typename MoveTerm>
double move_weighted_sum(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                         double mu, MoveTerm term) {
  double sum = 0.0;
  for (int k = 0; k < P.size(); ++k) {
    for (int j : P.move_rows[k]) {
      sum += pi(k) * P.p(k, j) * mu * term(P.nodes[k], P.nodes[j]);
    }
  }
  return sum;
}

// Average of a per-correspondent value, either at a fixed NAP or uniformly
// over the walk nodes.
template <typename Fn>
double cn_average(const DirectionMatrix& P, std::optional<NodeId> cn_nap, Fn fn) {
  if (cn_nap) return fn(*cn_nap);
  double sum = 0.0;
  for (NodeId s : P.nodes) sum += fn(s);
  return sum / static_cast<double>(P.nodes.size());
}

}  // namespace

double pmip_signaling(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                      const Eigen::MatrixXi& hops, NodeId anchor, double mu,
                      const MessageCatalog& catalog) {
  check_dims(P, pi, hops);
  const double pair_bytes = catalog.registration_pair_bytes();
  return move_weighted_sum(P, pi, mu, [&](NodeId k, NodeId j) {
    return pair_bytes * (hops(k, anchor) + hops(j, anchor));
  });
}

double pmip_delivery(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                     const Eigen::MatrixXi& hops, NodeId anchor,
                     std::optional<NodeId> cn_nap, const TrafficModel& traffic,
                     const MessageCatalog& catalog, bool uplink) {
  check_dims(P, pi, hops);
  const double rate = traffic.packet_rate();
  const double bytes = catalog.pmip_tunnel_bytes + traffic.payload_bytes;
  const double directions = uplink ? 2.0 : 1.0;
  return cn_average(P, cn_nap, [&](NodeId s) {
    double sum = 0.0;
    for (int k = 0; k < P.size(); ++k) {
      const double overhead = (hops(s, anchor) + hops(P.nodes[k], anchor)) * bytes;
      sum += pi(k) * rate * overhead;
    }
    return directions * sum;
  });
}

double icn_signaling(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                     const Eigen::MatrixXi& hops, std::optional<NodeId> cn_nap,
                     NodeId rv, double mu, const MessageCatalog& catalog) {
  check_dims(P, pi, hops);
  const double rendezvous_bytes =
      catalog.pub_request_bytes + catalog.start_publish_bytes;
  return cn_average(P, cn_nap, [&](NodeId s) {
    return move_weighted_sum(P, pi, mu, [&](NodeId k, NodeId j) {
      return hops(k, s) * catalog.iunsub_bytes + hops(j, rv) * rendezvous_bytes +
             hops(j, s) * catalog.pubisub_bytes;
    });
  });
}

double icn_delivery(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                    const Eigen::MatrixXi& hops, std::optional<NodeId> cn_nap,
                    const TrafficModel& traffic, const MessageCatalog& catalog,
                    bool uplink) {
  check_dims(P, pi, hops);
  const double rate = traffic.packet_rate();
  const double bytes = catalog.icn_header_bytes + traffic.payload_bytes;
  const double directions = uplink ? 2.0 : 1.0;
  return cn_average(P, cn_nap, [&](NodeId s) {
    double sum = 0.0;
    for (int k = 0; k < P.size(); ++k)
      sum += pi(k) * rate * hops(s, P.nodes[k]) * bytes;
    return directions * sum;
  });
}

std::vector<std::pair<double, double>> latency_distribution(
    const DirectionMatrix& P, const Eigen::VectorXd& pi, const Eigen::MatrixXi& hops,
    Scheme scheme, NodeId anchor_or_rv, std::optional<NodeId> cn_nap, double p,
    double m) {
  check_dims(P, pi, hops);
  require(p > 0 && m > 0, Errc::NonPositiveInput, "p and m must be > 0");
  std::map<double, double> weighted;
  double total = 0.0;
  auto add = [&](NodeId k, NodeId j, double weight, NodeId s) {
    const double value =
        scheme == Scheme::PMIP
            ? 5.0 * p + m * hops(k, anchor_or_rv) + 2.0 * m * hops(j, anchor_or_rv)
            : 5.0 * p + m * hops(k, s) + 2.0 * m * hops(j, anchor_or_rv);
    weighted[value] += weight;
    total += weight;
  };
  const std::vector<NodeId> cns =
      cn_nap ? std::vector<NodeId>{*cn_nap} : P.nodes;
  for (int k = 0; k < P.size(); ++k) {
    for (int j : P.move_rows[k]) {
      const double w = pi(k) * P.p(k, j) / static_cast<double>(cns.size());
      for (NodeId s : cns) add(P.nodes[k], P.nodes[j], w, s);
    }
  }
  require(total > 0, Errc::ConfigInvalid, "no transitions to enumerate");
  std::vector<std::pair<double, double>> out;
  out.reserve(weighted.size());
  for (auto [value, weight] : weighted) out.emplace_back(value, weight / total);
  return out;
}

nlohmann::json cost_report_to_json(const CostReport& r) {
  nlohmann::json j;
  j["signaling_hbps"] = r.signaling;
  j["delivery_hbps"] = r.delivery;
  j["total_hbps"] = r.total();
  if (!r.latency.empty()) {
    nlohmann::json lat = nlohmann::json::array();
    for (auto [value, prob] : r.latency) lat.push_back({{"value", value}, {"probability", prob}});
    j["latency"] = lat;
  }
  return j;
}

}  // namespace mobisim
