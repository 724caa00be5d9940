#pragma once

#include <Eigen/Dense>
#include <unordered_map>

#include "mobisim/messages.hpp"
#include "mobisim/topology.hpp"
#include "mobisim/trace.hpp"

namespace mobisim {

using MnId = int;

// Anchored mobility domain: a binding cache at the anchor maps each mobile
// to its current MAG, and all data is tunneled through the anchor.
class PmipDomain {
 public:
  PmipDomain(const TopologyGraph& graph, const Eigen::MatrixXi& hops,
             MessageCatalog catalog);

  // Registers an unbound mobile at `mag`: PBU mag->anchor, PBA anchor->mag.
  HandoverTrace attach(MnId mn, NodeId mag);

  // Moves a bound mobile to `to_mag`: deregistration exchange on the old
  // path, registration exchange on the new one.
  HandoverTrace handover(MnId mn, NodeId to_mag);

  // Downlink delivery CN -> anchor -> MN of one payload packet.
  std::vector<MessageEvent> deliver_packet(NodeId cn_mag, MnId mn) const;
  std::vector<MessageEvent> deliver_packet(NodeId cn_mag, MnId mn,
                                           int payload_bytes) const;

  // hops*bytes of one downlink packet; same accounting as deliver_packet.
  std::int64_t delivery_cost(NodeId cn_mag, MnId mn) const;

  bool bound(MnId mn) const { return binding_cache_.count(mn) != 0; }
  NodeId binding(MnId mn) const;
  const std::unordered_map<MnId, NodeId>& binding_cache() const { return binding_cache_; }
  int tunnel_count(NodeId mag) const;
  const MessageCatalog& catalog() const { return catalog_; }

 private:
  void check_mag(NodeId mag) const;

  const TopologyGraph* graph_;
  const Eigen::MatrixXi* hops_;
  MessageCatalog catalog_;
  std::unordered_map<MnId, NodeId> binding_cache_;
  std::unordered_map<NodeId, int> tunnel_refs_;
};

// Handover latency in abstract time units: five processing steps plus the
// deregistration leg and the registration round trip. The acknowledgement
// back to the previous MAG does not gate session re-establishment and is
// excluded.
double pmip_handover_latency(const Eigen::MatrixXi& hops, NodeId anchor,
                             NodeId from_mag, NodeId to_mag, double p, double m);

}  // namespace mobisim
