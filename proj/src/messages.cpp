#include "mobisim/messages.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <deque>

#include "mobisim/errors.hpp"

namespace mobisim {

const char* to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::PBU: return "PBU";
    case MessageKind::PBA: return "PBA";
    case MessageKind::IUNSUB: return "iUnsub";
    case MessageKind::PUB_REQUEST: return "PubRequest";
    case MessageKind::START_PUBLISH: return "StartPublish";
    case MessageKind::PUBISUB: return "PubiSub";
    case MessageKind::DATA_PMIP: return "DataPmip";
    case MessageKind::DATA_ICN: return "DataIcn";
  }
  return "?";
}

int MessageCatalog::size(MessageKind kind) const {
  switch (kind) {
    case MessageKind::PBU: return pbu_bytes;
    case MessageKind::PBA: return pba_bytes;
    case MessageKind::IUNSUB: return iunsub_bytes;
    case MessageKind::PUB_REQUEST: return pub_request_bytes;
    case MessageKind::START_PUBLISH: return start_publish_bytes;
    case MessageKind::PUBISUB: return pubisub_bytes;
    case MessageKind::DATA_PMIP: return pmip_data_bytes();
    case MessageKind::DATA_ICN: return icn_data_bytes();
  }
  fail(Errc::ConfigInvalid, "unknown message kind");
}

MessageCatalog default_catalog() { return MessageCatalog{}; }

nlohmann::json catalog_to_json(const MessageCatalog& c) {
  return nlohmann::json{
      {"L_u", c.pbu_bytes},           {"L_a", c.pba_bytes},
      {"zeta", c.payload_bytes},      {"phi", c.pmip_tunnel_bytes},
      {"ell_u", c.iunsub_bytes},      {"ell_r", c.pub_request_bytes},
      {"ell_s", c.start_publish_bytes}, {"ell_p", c.pubisub_bytes},
      {"phi_prime", c.icn_header_bytes},
  };
}

MessageCatalog catalog_from_json(const nlohmann::json& j) {
  MessageCatalog c;
  auto read = [&](const char* key, int& field) {
    if (j.contains(key)) {
      field = j.at(key).get<int>();
      require(field > 0, Errc::ConfigInvalid,
              std::string("catalog entry '") + key + "' must be positive");
    }
  };
  read("L_u", c.pbu_bytes);
  read("L_a", c.pba_bytes);
  read("zeta", c.payload_bytes);
  read("phi", c.pmip_tunnel_bytes);
  read("ell_u", c.iunsub_bytes);
  read("ell_r", c.pub_request_bytes);
  read("ell_s", c.start_publish_bytes);
  read("ell_p", c.pubisub_bytes);
  read("phi_prime", c.icn_header_bytes);
  return c;
}

std::string ScopeId::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : digest) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

namespace {

bool valid_address_text(std::string_view s) {
  if (s.empty() || s.size() > 64) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isxdigit(c) || c == '.' || c == ':' || c == '-';
  });
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

ScopeId scope_id(std::string_view ip_prefix, std::string_view ip_address) {
  require(valid_address_text(ip_prefix), Errc::MalformedAddress,
          "bad prefix text '" + std::string(ip_prefix) + "'");
  require(valid_address_text(ip_address), Errc::MalformedAddress,
          "bad address text '" + std::string(ip_address) + "'");
  const std::string scope = "/" + lowercase(ip_prefix) + "/" + lowercase(ip_address);
  ScopeId id;
  unsigned int len = 0;
  const int ok = EVP_Digest(scope.data(), scope.size(), id.digest.data(), &len,
                            EVP_sha256(), nullptr);
  require(ok == 1 && len == id.digest.size(), Errc::MalformedAddress,
          "digest computation failed");
  return id;
}

Fid fid_for(const TopologyGraph& g, NodeId src, NodeId dst) {
  require(src >= 0 && src < g.node_count, Errc::InvalidNode, "bad src");
  require(dst >= 0 && dst < g.node_count, Errc::InvalidNode, "bad dst");
  Fid fid;
  if (src == dst) {
    fid.path = {src};
    return fid;
  }
  // distances to dst, then greedy smallest-id descent from src
  std::vector<int> dist(g.node_count, -1);
  std::deque<NodeId> queue{dst};
  dist[dst] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  require(dist[src] >= 0, Errc::DisconnectedGraph, "no path between endpoints");
  fid.path.push_back(src);
  NodeId cur = src;
  while (cur != dst) {
    for (NodeId v : g.neighbors(cur)) {  // neighbors are sorted ascending
      if (dist[v] == dist[cur] - 1) {
        fid.path.push_back(v);
        cur = v;
        break;
      }
    }
  }
  return fid;
}

}  // namespace mobisim
