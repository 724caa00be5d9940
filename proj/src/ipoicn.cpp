#include "mobisim/ipoicn.hpp"

#include "mobisim/errors.hpp"

namespace mobisim {

IcnDomain::IcnDomain(const TopologyGraph& graph, const Eigen::MatrixXi& hops,
                     MessageCatalog catalog, NodeId rv)
    : graph_(&graph), hops_(&hops), catalog_(catalog), rv_(rv) {
  require(hops.rows() == graph.node_count && hops.cols() == graph.node_count,
          Errc::DimensionMismatch, "hop matrix does not match graph");
  require(rv >= 0 && rv < graph.node_count, Errc::InvalidNode, "RV is not a node");
}

void IcnDomain::check_nap(NodeId nap) const {
  require(nap >= 0 && nap < graph_->node_count, Errc::InvalidNap,
          "NAP " + std::to_string(nap) + " is not a node");
  require(nap != graph_->anchor, Errc::InvalidNap,
          "mobiles never attach at the anchor node");
}

void IcnDomain::subscribe(const ScopeId& scope, NodeId nap) {
  require(nap >= 0 && nap < graph_->node_count, Errc::InvalidNap, "bad NAP");
  rv_subscriptions_[scope] = nap;
}

HandoverTrace IcnDomain::session_establish(MnId mn, NodeId nap,
                                           const ScopeId& mn_scope,
                                           const ScopeId& cn_scope) {
  check_nap(nap);
  auto sub = rv_subscriptions_.find(cn_scope);
  require(sub != rv_subscriptions_.end(), Errc::NoSubscriber,
          "no subscriber registered for the correspondent scope");
  const NodeId cn_nap = sub->second;

  HandoverTrace trace;
  const bool have_match = local_matches_.count({nap, cn_scope}) != 0;
  if (!have_match) {
    // full rendezvous round trip, then publish toward the matched NAP
    trace.events.push_back({MessageKind::PUB_REQUEST, nap, rv_, (*hops_)(nap, rv_),
                            catalog_.pub_request_bytes, Plane::CONTROL});
    trace.events.push_back({MessageKind::START_PUBLISH, rv_, nap, (*hops_)(rv_, nap),
                            catalog_.start_publish_bytes, Plane::CONTROL});
  }
  trace.events.push_back({MessageKind::PUBISUB, nap, cn_nap, (*hops_)(nap, cn_nap),
                          catalog_.pubisub_bytes, Plane::CONTROL});

  local_matches_[{nap, cn_scope}] = cn_nap;       // MN side ready to publish
  local_matches_[{cn_nap, mn_scope}] = nap;       // implicit subscription installed
  attachments_[mn] = {nap, mn_scope, cn_scope, cn_nap};
  return trace;
}

HandoverTrace IcnDomain::handover(MnId mn, NodeId to_nap) {
  check_nap(to_nap);
  auto it = attachments_.find(mn);
  require(it != attachments_.end(), Errc::NotAttached,
          "MN " + std::to_string(mn) + " is not attached");
  Attachment& at = it->second;
  const NodeId from_nap = at.nap;
  require(to_nap != from_nap, Errc::SameNap, "handover to the current NAP");
  const NodeId s = at.cn_nap;

  HandoverTrace trace;
  trace.events = {
      {MessageKind::IUNSUB, from_nap, s, (*hops_)(from_nap, s), catalog_.iunsub_bytes,
       Plane::CONTROL},
      {MessageKind::PUB_REQUEST, to_nap, rv_, (*hops_)(to_nap, rv_),
       catalog_.pub_request_bytes, Plane::CONTROL},
      {MessageKind::START_PUBLISH, rv_, to_nap, (*hops_)(rv_, to_nap),
       catalog_.start_publish_bytes, Plane::CONTROL},
      {MessageKind::PUBISUB, to_nap, s, (*hops_)(to_nap, s), catalog_.pubisub_bytes,
       Plane::CONTROL},
  };

  // the old NAP drops its state; the correspondent's match is re-pointed
  local_matches_.erase({from_nap, at.cn_scope});
  local_matches_.erase({s, at.mn_scope});
  local_matches_[{to_nap, at.cn_scope}] = s;
  local_matches_[{s, at.mn_scope}] = to_nap;
  at.nap = to_nap;
  return trace;
}

std::vector<MessageEvent> IcnDomain::deliver_packet(MnId mn) const {
  return deliver_packet(mn, catalog_.payload_bytes);
}

std::vector<MessageEvent> IcnDomain::deliver_packet(MnId mn, int payload_bytes) const {
  auto it = attachments_.find(mn);
  require(it != attachments_.end(), Errc::NotAttached, "MN is not attached");
  const Attachment& at = it->second;
  auto match = local_matches_.find({at.cn_nap, at.mn_scope});
  require(match != local_matches_.end() && match->second == at.nap, Errc::NoMatch,
          "no local match for the mobile's scope at the correspondent NAP");
  const int bytes = catalog_.icn_header_bytes + payload_bytes;
  return {{MessageKind::DATA_ICN, at.cn_nap, at.nap, (*hops_)(at.cn_nap, at.nap),
           bytes, Plane::DATA}};
}

std::int64_t IcnDomain::delivery_cost(MnId mn) const {
  auto it = attachments_.find(mn);
  require(it != attachments_.end(), Errc::NotAttached, "MN is not attached");
  const Attachment& at = it->second;
  return static_cast<std::int64_t>((*hops_)(at.cn_nap, at.nap)) *
         catalog_.icn_data_bytes();
}

NodeId IcnDomain::attachment(MnId mn) const {
  auto it = attachments_.find(mn);
  require(it != attachments_.end(), Errc::NotAttached, "MN is not attached");
  return it->second.nap;
}

NodeId IcnDomain::subscriber_of(const ScopeId& scope) const {
  auto it = rv_subscriptions_.find(scope);
  require(it != rv_subscriptions_.end(), Errc::NoSubscriber, "scope unknown at RV");
  return it->second;
}

int IcnDomain::local_match_count(const ScopeId& scope) const {
  int count = 0;
  for (const auto& [key, remote] : local_matches_)
    if (key.scope == scope) ++count;
  return count;
}

double icn_handover_latency(const Eigen::MatrixXi& hops, NodeId rv, NodeId cn_nap,
                            NodeId from_nap, NodeId to_nap, double p, double m) {
  require(p > 0 && m > 0, Errc::NonPositiveInput, "p and m must be > 0");
  return 5.0 * p + m * hops(from_nap, cn_nap) + 2.0 * m * hops(to_nap, rv);
}

}  // namespace mobisim
