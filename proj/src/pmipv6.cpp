#include "mobisim/pmipv6.hpp"

#include "mobisim/errors.hpp"

namespace mobisim {

PmipDomain::PmipDomain(const TopologyGraph& graph, const Eigen::MatrixXi& hops,
                       MessageCatalog catalog)
    : graph_(&graph), hops_(&hops), catalog_(catalog) {
  require(hops.rows() == graph.node_count && hops.cols() == graph.node_count,
          Errc::DimensionMismatch, "hop matrix does not match graph");
}

void PmipDomain::check_mag(NodeId mag) const {
  require(mag >= 0 && mag < graph_->node_count, Errc::InvalidMag,
          "MAG " + std::to_string(mag) + " is not a node");
  require(mag != graph_->anchor, Errc::InvalidMag,
          "mobiles never attach at the anchor");
}

HandoverTrace PmipDomain::attach(MnId mn, NodeId mag) {
  check_mag(mag);
  require(!bound(mn), Errc::AlreadyBound, "MN " + std::to_string(mn) + " already bound");
  const NodeId a = graph_->anchor;
  const int h = (*hops_)(mag, a);
  binding_cache_[mn] = mag;
  ++tunnel_refs_[mag];
  HandoverTrace trace;
  trace.events = {
      {MessageKind::PBU, mag, a, h, catalog_.pbu_bytes, Plane::CONTROL},
      {MessageKind::PBA, a, mag, h, catalog_.pba_bytes, Plane::CONTROL},
  };
  return trace;
}

HandoverTrace PmipDomain::handover(MnId mn, NodeId to_mag) {
  check_mag(to_mag);
  auto it = binding_cache_.find(mn);
  require(it != binding_cache_.end(), Errc::NotBound,
          "MN " + std::to_string(mn) + " has no binding");
  const NodeId from_mag = it->second;
  require(to_mag != from_mag, Errc::SameMag, "handover to the current MAG");
  const NodeId a = graph_->anchor;
  const int h_old = (*hops_)(from_mag, a);
  const int h_new = (*hops_)(to_mag, a);
  it->second = to_mag;
  if (--tunnel_refs_[from_mag] == 0) tunnel_refs_.erase(from_mag);
  ++tunnel_refs_[to_mag];
  HandoverTrace trace;
  trace.events = {
      {MessageKind::PBU, from_mag, a, h_old, catalog_.pbu_bytes, Plane::CONTROL},
      {MessageKind::PBA, a, from_mag, h_old, catalog_.pba_bytes, Plane::CONTROL},
      {MessageKind::PBU, to_mag, a, h_new, catalog_.pbu_bytes, Plane::CONTROL},
      {MessageKind::PBA, a, to_mag, h_new, catalog_.pba_bytes, Plane::CONTROL},
  };
  return trace;
}

std::vector<MessageEvent> PmipDomain::deliver_packet(NodeId cn_mag, MnId mn) const {
  return deliver_packet(cn_mag, mn, catalog_.payload_bytes);
}

std::vector<MessageEvent> PmipDomain::deliver_packet(NodeId cn_mag, MnId mn,
                                                     int payload_bytes) const {
  auto it = binding_cache_.find(mn);
  require(it != binding_cache_.end(), Errc::NotBound, "MN is not bound");
  const NodeId a = graph_->anchor;
  const NodeId mag = it->second;
  const int bytes = catalog_.pmip_tunnel_bytes + payload_bytes;
  return {
      {MessageKind::DATA_PMIP, cn_mag, a, (*hops_)(cn_mag, a), bytes, Plane::DATA},
      {MessageKind::DATA_PMIP, a, mag, (*hops_)(a, mag), bytes, Plane::DATA},
  };
}

std::int64_t PmipDomain::delivery_cost(NodeId cn_mag, MnId mn) const {
  auto it = binding_cache_.find(mn);
  require(it != binding_cache_.end(), Errc::NotBound, "MN is not bound");
  const NodeId a = graph_->anchor;
  const std::int64_t hops = (*hops_)(cn_mag, a) + (*hops_)(a, it->second);
  return hops * catalog_.pmip_data_bytes();
}

NodeId PmipDomain::binding(MnId mn) const {
  auto it = binding_cache_.find(mn);
  require(it != binding_cache_.end(), Errc::NotBound, "MN is not bound");
  return it->second;
}

int PmipDomain::tunnel_count(NodeId mag) const {
  auto it = tunnel_refs_.find(mag);
  return it == tunnel_refs_.end() ? 0 : 1;
}

double pmip_handover_latency(const Eigen::MatrixXi& hops, NodeId anchor,
                             NodeId from_mag, NodeId to_mag, double p, double m) {
  require(p > 0 && m > 0, Errc::NonPositiveInput, "p and m must be > 0");
  return 5.0 * p + m * hops(from_mag, anchor) + 2.0 * m * hops(to_mag, anchor);
}

}  // namespace mobisim
