#include <set>
#include <string>

#include "doctest.h"
#include "mobisim/messages.hpp"
#include "mobisim/topology.hpp"

using namespace mobisim;

TEST_SUITE("messages") {

TEST_CASE("default catalog sizes") {
  auto c = default_catalog();
  CHECK(c.size(MessageKind::PBU) == 76);
  CHECK(c.size(MessageKind::PBA) == 76);
  CHECK(c.size(MessageKind::IUNSUB) == 166);
  CHECK(c.size(MessageKind::PUB_REQUEST) == 160);
  CHECK(c.size(MessageKind::START_PUBLISH) == 166);
  CHECK(c.size(MessageKind::PUBISUB) == 166);
  CHECK(c.registration_pair_bytes() == 152);
  CHECK(c.pmip_data_bytes() == 1064);
  CHECK(c.icn_data_bytes() == 1120);
  CHECK(c.size(MessageKind::DATA_PMIP) == 1064);
  CHECK(c.size(MessageKind::DATA_ICN) == 1120);
}

TEST_CASE("catalog json round trip is bit exact") {
  auto c = default_catalog();
  c.icn_header_bytes = 128;
  c.payload_bytes = 512;
  auto j = catalog_to_json(c);
  CHECK(catalog_from_json(j) == c);
  CHECK(catalog_to_json(catalog_from_json(j)) == j);
  CHECK(j.at("phi_prime") == 128);
  CHECK(j.at("zeta") == 512);
}

TEST_CASE("catalog rejects non-positive sizes") {
  CHECK_THROWS_AS(catalog_from_json({{"L_u", 0}}), SimError);
  CHECK_THROWS_AS(catalog_from_json({{"zeta", -5}}), SimError);
}

TEST_CASE("scope ids are deterministic 32-byte digests") {
  auto a = scope_id("10.0.0.0-8", "10.0.0.1");
  auto b = scope_id("10.0.0.0-8", "10.0.0.1");
  CHECK(a == b);
  CHECK(a.digest.size() == 32);
  CHECK(a.hex().size() == 64);
  auto c = scope_id("10.0.0.0-8", "10.0.0.2");
  CHECK_FALSE(a == c);
  // canonicalization: hex case does not matter
  CHECK(scope_id("2001:DB8::-32", "2001:DB8::1") ==
        scope_id("2001:db8::-32", "2001:db8::1"));
}

TEST_CASE("scope id rejects malformed text") {
  CHECK_THROWS_WITH_AS(scope_id("", "10.0.0.1"),
                       doctest::Contains("MalformedAddress"), SimError);
  CHECK_THROWS_AS(scope_id("10.0.0.0-8", "10.0.0 .1"), SimError);
  CHECK_THROWS_AS(scope_id("10.0.0.0-8", "host/name"), SimError);
}

TEST_CASE("no collisions over a 10^4 address corpus") {
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j)
      seen.insert(scope_id("10.0.0.0-16",
                           "10.0." + std::to_string(i) + "." + std::to_string(j))
                      .hex());
  CHECK(seen.size() == 10000);
}

TEST_CASE("fid basics") {
  auto path = from_adjacency({{0, 1}, {1, 2}}, 1);
  CHECK(fid_for(path, 0, 0).path == std::vector<NodeId>{0});
  CHECK(fid_for(path, 0, 0).hop_count() == 0);
  CHECK(fid_for(path, 0, 2).path == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("fid tie-break picks the lexicographically smallest path") {
  // two shortest routes 0-1-3 and 0-2-3
  auto g = from_adjacency({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0);
  CHECK(fid_for(g, 0, 3).path == std::vector<NodeId>{0, 1, 3});
  CHECK(fid_for(g, 3, 0).path == std::vector<NodeId>{3, 1, 0});
}

TEST_CASE("fid hop counts equal the hop matrix everywhere") {
  for (auto g : {fixture_paper_topology(), random_geometric(30, 1800.0, 0, 0, 2)}) {
    auto hops = hop_counts(g);
    for (NodeId s = 0; s < g.node_count; ++s) {
      for (NodeId d = 0; d < g.node_count; ++d) {
        auto fid = fid_for(g, s, d);
        CHECK(fid.hop_count() == hops(s, d));
        for (int i = 0; i + 1 < static_cast<int>(fid.path.size()); ++i)
          CHECK(g.has_edge(fid.path[i], fid.path[i + 1]));
      }
    }
  }
  auto g = fixture_paper_topology();
  CHECK(fid_for(g, 2, 3).hop_count() == 3);  // AP3 -> AP4
}

}  // TEST_SUITE
