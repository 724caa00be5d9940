#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mobisim/messages.hpp"
#include "mobisim/mobility.hpp"
#include "mobisim/topology.hpp"

namespace mobisim {

enum class Scheme { PMIP, ICN };

struct TrafficModel {
  double bit_rate_bps = 1e6;
  int payload_bytes = 1024;
  double packet_rate() const { return bit_rate_bps / (8.0 * payload_bytes); }
};

// Closed-form expected costs in hops*bytes per second over the stationary
// walk. Signaling sums over moves (k -> j, j != k) weighted by
// pi_k p_(k,j) mu; delivery sums per-location packet overhead weighted by
// pi_k R. A nullopt correspondent NAP averages uniformly over the walk
// nodes.

double pmip_signaling(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                      const Eigen::MatrixXi& hops, NodeId anchor, double mu,
                      const MessageCatalog& catalog);

double pmip_delivery(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                     const Eigen::MatrixXi& hops, NodeId anchor,
                     std::optional<NodeId> cn_nap, const TrafficModel& traffic,
                     const MessageCatalog& catalog, bool uplink = false);

double icn_signaling(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                     const Eigen::MatrixXi& hops, std::optional<NodeId> cn_nap,
                     NodeId rv, double mu, const MessageCatalog& catalog);

double icn_delivery(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                    const Eigen::MatrixXi& hops, std::optional<NodeId> cn_nap,
                    const TrafficModel& traffic, const MessageCatalog& catalog,
                    bool uplink = false);

// Distribution of per-handover latency over stationary moves, as sorted
// (value, probability) pairs with probabilities summing to 1.
std::vector<std::pair<double, double>> latency_distribution(
    const DirectionMatrix& P, const Eigen::VectorXd& pi, const Eigen::MatrixXi& hops,
    Scheme scheme, NodeId anchor_or_rv, std::optional<NodeId> cn_nap, double p,
    double m);

struct CostReport {
  double signaling = 0.0;  // hops*bytes / s
  double delivery = 0.0;   // hops*bytes / s
  double total() const { return signaling + delivery; }
  std::vector<std::pair<double, double>> latency;
};

nlohmann::json cost_report_to_json(const CostReport& r);

}  // namespace mobisim
