#include "mobisim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "mobisim/rng.hpp"

namespace mobisim {

namespace {

std::vector<int> bfs_from(const std::vector<std::vector<NodeId>>& adj, NodeId src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<NodeId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool connected(const std::vector<std::vector<NodeId>>& adj) {
  if (adj.empty()) return false;
  auto dist = bfs_from(adj, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// connectivity of the induced subgraph without `skip`
bool connected_excluding(const std::vector<std::vector<NodeId>>& adj, NodeId skip) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) return true;
  NodeId start = skip == 0 ? 1 : 0;
  std::vector<int> seen(n, 0);
  std::deque<NodeId> queue{start};
  seen[start] = 1;
  int count = 1;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u]) {
      if (v == skip || seen[v]) continue;
      seen[v] = 1;
      ++count;
      queue.push_back(v);
    }
  }
  return count == n - 1;
}

void validate(const TopologyGraph& g) {
  require(g.node_count >= 1, Errc::ConfigInvalid, "graph needs at least one node");
  require(static_cast<int>(g.adjacency.size()) == g.node_count, Errc::ConfigInvalid,
          "adjacency size mismatch");
  for (NodeId k = 0; k < g.node_count; ++k) {
    for (NodeId v : g.adjacency[k]) {
      require(v >= 0 && v < g.node_count, Errc::InvalidNode, "neighbor out of range");
      require(v != k, Errc::SelfLoopEdge, "self edge at node " + std::to_string(k));
      require(g.has_edge(v, k), Errc::ConfigInvalid, "asymmetric adjacency");
    }
  }
  require(g.anchor >= 0 && g.anchor < g.node_count, Errc::InvalidAnchor,
          "anchor " + std::to_string(g.anchor) + " not a node");
  if (g.node_count > 1)
    require(connected(g.adjacency), Errc::DisconnectedGraph, "graph is not connected");
  for (NodeId k : g.walk_nodes) {
    require(k >= 0 && k < g.node_count, Errc::InvalidNode, "walk node out of range");
    require(k != g.anchor, Errc::InvalidAnchor, "anchor cannot be walkable");
  }
}

std::vector<NodeId> default_walk_nodes(int node_count, NodeId anchor) {
  std::vector<NodeId> nodes;
  nodes.reserve(node_count > 0 ? node_count - 1 : 0);
  for (NodeId k = 0; k < node_count; ++k)
    if (k != anchor) nodes.push_back(k);
  return nodes;
}

}  // namespace

bool TopologyGraph::has_edge(NodeId u, NodeId v) const {
  const auto& nb = adjacency.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool TopologyGraph::is_walkable(NodeId k) const {
  return std::binary_search(walk_nodes.begin(), walk_nodes.end(), k);
}

std::vector<std::pair<NodeId, NodeId>> TopologyGraph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < node_count; ++u)
    for (NodeId v : adjacency[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

TopologyGraph from_adjacency(const std::vector<std::pair<NodeId, NodeId>>& edges,
                             NodeId anchor, std::vector<NodeId> walk_nodes) {
  require(!edges.empty(), Errc::ConfigInvalid, "empty edge list");
  NodeId max_id = 0;
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0, Errc::InvalidNode, "negative node id");
    require(u != v, Errc::SelfLoopEdge,
            "self edge (" + std::to_string(u) + "," + std::to_string(u) + ")");
    max_id = std::max({max_id, u, v});
  }
  TopologyGraph g;
  g.node_count = max_id + 1;
  require(anchor >= 0 && anchor <= max_id, Errc::InvalidAnchor,
          "anchor " + std::to_string(anchor) + " outside node range");
  std::vector<std::set<NodeId>> nb(g.node_count);
  for (auto [u, v] : edges) {
    nb[u].insert(v);  // duplicates merge: adjacency is a set
    nb[v].insert(u);
  }
  g.adjacency.resize(g.node_count);
  for (NodeId k = 0; k < g.node_count; ++k)
    g.adjacency[k].assign(nb[k].begin(), nb[k].end());
  g.anchor = anchor;
  if (walk_nodes.empty()) {
    g.walk_nodes = default_walk_nodes(g.node_count, anchor);
  } else {
    std::sort(walk_nodes.begin(), walk_nodes.end());
    walk_nodes.erase(std::unique(walk_nodes.begin(), walk_nodes.end()), walk_nodes.end());
    g.walk_nodes = std::move(walk_nodes);
  }
  validate(g);
  return g;
}

TopologyGraph fixture_paper_topology(NodeId attach_to) {
  // adjacency of the nine access nodes AP1..AP9 (0-based)
  std::vector<std::pair<NodeId, NodeId>> edges = {
      {0, 1}, {0, 3}, {0, 4},          // AP1: AP2, AP4, AP5
      {1, 2}, {1, 5},                  // AP2: AP3, AP6
      {2, 6},                          // AP3: AP7
      {3, 4}, {3, 7},                  // AP4: AP5, AP8
      {4, 5}, {4, 7},                  // AP5: AP6, AP8
      {5, 6}, {5, 7}, {5, 8},          // AP6: AP7, AP8, AP9
      {6, 8},                          // AP7: AP9
      {7, 8},                          // AP8: AP9
  };
  require(attach_to >= 0 && attach_to < 9, Errc::InvalidAnchor,
          "fixture anchor attachment must be an access node");
  const NodeId anchor = 9;
  edges.emplace_back(attach_to, anchor);
  return from_adjacency(edges, anchor);
}

TopologyGraph fixture_star_detour() {
  // 0 = MN side, 1 = hub, 2 = CN side, 3 = anchor leaf
  return from_adjacency({{0, 1}, {1, 2}, {1, 3}}, 3, {0});
}

TopologyGraph fixture_path_detour() {
  // 0 = anchor, 1 = MN side, 2 = CN side
  return from_adjacency({{0, 1}, {1, 2}}, 0, {1});
}

double radius_for_mean_degree(int n, double mean_degree, double area_w_m,
                              double area_h_m) {
  require(n >= 1, Errc::NonPositiveInput, "n must be positive");
  require(mean_degree > 0, Errc::NonPositiveInput, "mean degree must be positive");
  return std::sqrt(mean_degree * area_w_m * area_h_m / (n * M_PI));
}

TopologyGraph random_geometric(int n, double connection_radius_m, double area_w_m,
                               double area_h_m, std::uint64_t seed,
                               double cell_radius_m) {
  require(n >= 1, Errc::NonPositiveInput, "n must be >= 1");
  require(connection_radius_m > 0, Errc::NonPositiveInput, "radius must be > 0");
  if (area_w_m <= 0 || area_h_m <= 0) {
    const double side = 2.0 * cell_radius_m * std::sqrt(static_cast<double>(n));
    area_w_m = area_h_m = side;
  }
  const double r2 = connection_radius_m * connection_radius_m;
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(attempt), 0xf09));
    std::vector<std::array<double, 2>> pts(n);
    for (auto& p : pts) {
      p[0] = rng.uniform(0.0, area_w_m);
      p[1] = rng.uniform(0.0, area_h_m);
    }
    std::vector<std::vector<NodeId>> adj(n);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const double dx = pts[i][0] - pts[j][0];
        const double dy = pts[i][1] - pts[j][1];
        if (dx * dx + dy * dy <= r2) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
    }
    if (n > 1 && !connected(adj)) continue;
    TopologyGraph g;
    g.node_count = n;
    g.adjacency = std::move(adj);
    g.positions = std::move(pts);
    g.cell_radius_m = cell_radius_m;
    g.anchor = central_node(g);
    // the central node is the default anchor and anchors are not walkable,
    // so the graph must stay connected without it
    if (!connected_excluding(g.adjacency, g.anchor)) continue;
    g.walk_nodes = default_walk_nodes(n, g.anchor);
    validate(g);
    return g;
  }
  fail(Errc::ConnectivityRetriesExhausted,
       "no connected geometric graph in " + std::to_string(kMaxAttempts) + " attempts");
}

Eigen::MatrixXi hop_counts(const TopologyGraph& g) {
  Eigen::MatrixXi hops(g.node_count, g.node_count);
  for (NodeId src = 0; src < g.node_count; ++src) {
    auto dist = bfs_from(g.adjacency, src);
    for (NodeId dst = 0; dst < g.node_count; ++dst) {
      require(dist[dst] >= 0, Errc::DisconnectedGraph, "unreachable node pair");
      hops(src, dst) = dist[dst];
    }
  }
  return hops;
}

NodeId central_node(const TopologyGraph& g, const Eigen::MatrixXi& hops) {
  NodeId best = 0;
  double best_mean = std::numeric_limits<double>::infinity();
  for (NodeId k = 0; k < g.node_count; ++k) {
    const double mean = hops.row(k).sum() / static_cast<double>(g.node_count);
    if (mean < best_mean) {
      best_mean = mean;
      best = k;
    }
  }
  return best;
}

NodeId central_node(const TopologyGraph& g) { return central_node(g, hop_counts(g)); }

TopologyGraph attach_anchor_node(const TopologyGraph& g, NodeId attach_to) {
  require(attach_to >= 0 && attach_to < g.node_count, Errc::InvalidAnchor,
          "attachment point not a node");
  TopologyGraph out = g;
  const NodeId anchor = g.node_count;
  out.node_count = g.node_count + 1;
  out.adjacency.push_back({attach_to});
  auto& nb = out.adjacency[attach_to];
  nb.insert(std::upper_bound(nb.begin(), nb.end(), anchor), anchor);
  if (!out.positions.empty()) out.positions.push_back(out.positions[attach_to]);
  out.anchor = anchor;
  out.walk_nodes = default_walk_nodes(out.node_count, anchor);
  validate(out);
  return out;
}

TopologyGraph with_anchor(const TopologyGraph& g, NodeId anchor) {
  require(anchor >= 0 && anchor < g.node_count, Errc::InvalidAnchor,
          "anchor not a node");
  TopologyGraph out = g;
  out.anchor = anchor;
  out.walk_nodes = default_walk_nodes(out.node_count, anchor);
  validate(out);
  return out;
}

nlohmann::json graph_to_json(const TopologyGraph& g) {
  nlohmann::json j;
  j["nodes"] = g.node_count;
  j["edges"] = g.edge_list();
  j["anchor"] = g.anchor;
  j["cell_radius_m"] = g.cell_radius_m;
  if (!g.positions.empty()) j["positions"] = g.positions;
  if (g.walk_nodes != default_walk_nodes(g.node_count, g.anchor))
    j["walk_nodes"] = g.walk_nodes;
  return j;
}

TopologyGraph graph_from_json(const nlohmann::json& j) {
  require(j.contains("edges") && j.contains("anchor"), Errc::ConfigInvalid,
          "graph json needs 'edges' and 'anchor'");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
  std::vector<NodeId> walk;
  if (j.contains("walk_nodes")) walk = j.at("walk_nodes").get<std::vector<NodeId>>();
  TopologyGraph g = from_adjacency(edges, j.at("anchor").get<NodeId>(), walk);
  if (j.contains("nodes"))
    require(j.at("nodes").get<int>() == g.node_count, Errc::ConfigInvalid,
            "node count does not match edge list");
  if (j.contains("cell_radius_m")) g.cell_radius_m = j.at("cell_radius_m").get<double>();
  if (j.contains("positions"))
    g.positions = j.at("positions").get<std::vector<std::array<double, 2>>>();
  return g;
}

std::vector<std::string> fixture_names() {
  return {"paper-fig5", "star-detour", "path-detour"};
}

TopologyGraph fixture_by_name(const std::string& name) {
  if (name == "paper-fig5") return fixture_paper_topology();
  if (name == "star-detour") return fixture_star_detour();
  if (name == "path-detour") return fixture_path_detour();
  fail(Errc::ConfigInvalid, "unknown fixture '" + name + "'");
}

}  // namespace mobisim
