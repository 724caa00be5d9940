#pragma once

#include <Eigen/Dense>
#include <unordered_map>

#include "mobisim/messages.hpp"
#include "mobisim/topology.hpp"
#include "mobisim/trace.hpp"

namespace mobisim {

using MnId = int;

// Anchorless pub/sub mobility domain. The domain rendezvous matches
// publications to subscriptions; each NAP keeps local matches that let data
// flow NAP-to-NAP over the shortest path. The RV/TM never sits on the data
// path.
class IcnDomain {
 public:
  IcnDomain(const TopologyGraph& graph, const Eigen::MatrixXi& hops,
            MessageCatalog catalog, NodeId rv);

  // Registers a static correspondent: its NAP subscribes to the scope at the
  // domain rendezvous.
  void subscribe(const ScopeId& scope, NodeId nap);

  // Attaches a mobile at `nap` and establishes the session toward the
  // correspondent scope: PubRequest nap->RV, StartPublish RV->nap, PubiSub
  // nap->cn_nap. A repeat over an existing local match short-circuits the
  // rendezvous and sends the PubiSub alone.
  HandoverTrace session_establish(MnId mn, NodeId nap, const ScopeId& mn_scope,
                                  const ScopeId& cn_scope);

  // Moves an attached mobile to `to_nap`: iUnsub old->cn_nap, PubRequest
  // new->RV, StartPublish RV->new, PubiSub new->cn_nap (payload excluded
  // from signaling accounting). The mobile keeps its scope/IP.
  HandoverTrace handover(MnId mn, NodeId to_nap);

  // Downlink delivery CN NAP -> MN NAP of one payload packet, direct path.
  std::vector<MessageEvent> deliver_packet(MnId mn) const;
  std::vector<MessageEvent> deliver_packet(MnId mn, int payload_bytes) const;
  std::int64_t delivery_cost(MnId mn) const;

  bool attached(MnId mn) const { return attachments_.count(mn) != 0; }
  NodeId attachment(MnId mn) const;
  NodeId rv() const { return rv_; }
  NodeId subscriber_of(const ScopeId& scope) const;  // InvalidNap if none

  // Number of NAPs holding a local match for `scope` (domain-wide).
  int local_match_count(const ScopeId& scope) const;

  const MessageCatalog& catalog() const { return catalog_; }

 private:
  struct Attachment {
    NodeId nap;
    ScopeId mn_scope;
    ScopeId cn_scope;
    NodeId cn_nap;
  };
  struct NapKey {
    NodeId nap;
    ScopeId scope;
    bool operator==(const NapKey&) const = default;
  };
  struct NapKeyHash {
    std::size_t operator()(const NapKey& k) const {
      return ScopeIdHash{}(k.scope) ^ (static_cast<std::size_t>(k.nap) * 0x9E3779B97F4A7C15ULL);
    }
  };

  void check_nap(NodeId nap) const;

  const TopologyGraph* graph_;
  const Eigen::MatrixXi* hops_;
  MessageCatalog catalog_;
  NodeId rv_;
  std::unordered_map<ScopeId, NodeId, ScopeIdHash> rv_subscriptions_;
  std::unordered_map<NapKey, NodeId, NapKeyHash> local_matches_;  // (nap, scope) -> remote nap
  std::unordered_map<MnId, Attachment> attachments_;
};

// Handover latency in abstract time units: five processing steps plus the
// unsubscribe leg toward the correspondent NAP and the rendezvous round
// trip. The final publish carries the first data packet and adds nothing.
double icn_handover_latency(const Eigen::MatrixXi& hops, NodeId rv, NodeId cn_nap,
                            NodeId from_nap, NodeId to_nap, double p, double m);

}  // namespace mobisim
