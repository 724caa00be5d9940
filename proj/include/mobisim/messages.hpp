#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mobisim/topology.hpp"

namespace mobisim {

enum class MessageKind {
  PBU,
  PBA,
  IUNSUB,
  PUB_REQUEST,
  START_PUBLISH,
  PUBISUB,
  DATA_PMIP,
  DATA_ICN,
};

const char* to_string(MessageKind kind);

// Per-message byte sizes. Defaults are the standard evaluation set; all are
// overridable through the JSON config keys listed next to each field.
struct MessageCatalog {
  int pbu_bytes = 76;             // "L_u"       proxy binding update
  int pba_bytes = 76;             // "L_a"       proxy binding acknowledgement
  int payload_bytes = 1024;       // "zeta"      average data payload
  int pmip_tunnel_bytes = 40;     // "phi"       PMIPv6 tunnelling header
  int iunsub_bytes = 166;         // "ell_u"     implicit unsubscribe
  int pub_request_bytes = 160;    // "ell_r"     publish request
  int start_publish_bytes = 166;  // "ell_s"     start publish
  int pubisub_bytes = 166;        // "ell_p"     publish w/ implicit subscribe
  int icn_header_bytes = 96;      // "phi_prime" ICN payload packet header

  // control-plane size of a signaling message
  int size(MessageKind kind) const;
  // L_T: one registration or deregistration exchange
  int registration_pair_bytes() const { return pbu_bytes + pba_bytes; }
  // on-wire bytes of one data packet
  int pmip_data_bytes() const { return pmip_tunnel_bytes + payload_bytes; }
  int icn_data_bytes() const { return icn_header_bytes + payload_bytes; }

  bool operator==(const MessageCatalog&) const = default;
};

MessageCatalog default_catalog();

nlohmann::json catalog_to_json(const MessageCatalog& c);
MessageCatalog catalog_from_json(const nlohmann::json& j);

// 256-bit name of /IP-Prefix/IP-address, produced by hashing the
// canonicalized scope string with SHA-256.
struct ScopeId {
  std::array<std::uint8_t, 32> digest{};
  bool operator==(const ScopeId&) const = default;
  std::string hex() const;
};

struct ScopeIdHash {
  std::size_t operator()(const ScopeId& s) const {
    std::size_t h = 0;
    for (int i = 0; i < 8; ++i) h = (h << 8) | s.digest[i];
    return h;
  }
};

ScopeId scope_id(std::string_view ip_prefix, std::string_view ip_address);

// Resolved delivery path; stands in for an encoded forwarding identifier.
struct Fid {
  std::vector<NodeId> path;
  int hop_count() const { return static_cast<int>(path.size()) - 1; }
};

// Shortest path src -> dst; equal-length ties resolve to the
// lexicographically smallest node sequence.
Fid fid_for(const TopologyGraph& g, NodeId src, NodeId dst);

}  // namespace mobisim
