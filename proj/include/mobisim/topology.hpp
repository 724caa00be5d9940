#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mobisim/errors.hpp"

namespace mobisim {

using NodeId = int;

// Undirected access-network graph. Nodes are MAGs/NAPs plus, optionally, a
// dedicated anchor node hosting the LMA and RV/TM. `walk_nodes` lists the
// nodes a mobile may attach to; the anchor is never walkable.
struct TopologyGraph {
  int node_count = 0;
  std::vector<std::vector<NodeId>> adjacency;      // sorted neighbor lists
  std::vector<std::array<double, 2>> positions;    // empty unless generated
  double cell_radius_m = 500.0;
  NodeId anchor = 0;
  std::vector<NodeId> walk_nodes;                  // ascending

  const std::vector<NodeId>& neighbors(NodeId k) const { return adjacency.at(k); }
  int degree(NodeId k) const { return static_cast<int>(adjacency.at(k).size()); }
  bool has_edge(NodeId u, NodeId v) const;
  bool is_walkable(NodeId k) const;
  std::vector<std::pair<NodeId, NodeId>> edge_list() const;
};

// Builds a graph from an undirected edge list. Duplicate edges merge; self
// edges and out-of-range anchors are errors, as is a disconnected graph.
// An empty `walk_nodes` means "every node except the anchor".
TopologyGraph from_adjacency(const std::vector<std::pair<NodeId, NodeId>>& edges,
                             NodeId anchor,
                             std::vector<NodeId> walk_nodes = {});

// Nine access nodes wired per the bundled example topology, plus a dedicated
// anchor node attached to `attach_to` (default: the max-degree access node).
TopologyGraph fixture_paper_topology(NodeId attach_to = 5);

// Two small shapes contrasting direct vs anchored delivery routes:
// star_detour: MN--x--CN with the anchor a third leaf of x (direct 2, anchored 4).
// path_detour: anchor--MN--CN in a line (direct 1, anchored 3).
TopologyGraph fixture_star_detour();
TopologyGraph fixture_path_detour();

// Uniform node placement in a w x h rectangle, edge iff Euclidean distance
// <= connection_radius_m. Regenerates with derived sub-seeds until connected
// (up to 100 attempts). Pure function of its arguments. Pass area 0 x 0 to
// use a square sized so n cells of radius cell_radius_m tile it.
TopologyGraph random_geometric(int n, double connection_radius_m,
                               double area_w_m, double area_h_m,
                               std::uint64_t seed,
                               double cell_radius_m = 500.0);

// Connection radius giving an expected mean degree on the default area.
double radius_for_mean_degree(int n, double mean_degree, double area_w_m,
                              double area_h_m);

// All-pairs shortest-path hop counts by BFS from every node.
Eigen::MatrixXi hop_counts(const TopologyGraph& g);

// Node minimizing the mean hop distance to all nodes; ties -> lowest id.
NodeId central_node(const TopologyGraph& g);
NodeId central_node(const TopologyGraph& g, const Eigen::MatrixXi& hops);

// Copy of `g` with a new dedicated anchor node attached to `attach_to`.
TopologyGraph attach_anchor_node(const TopologyGraph& g, NodeId attach_to);

// Copy of `g` re-anchored at an existing node (walk set reset to default).
TopologyGraph with_anchor(const TopologyGraph& g, NodeId anchor);

nlohmann::json graph_to_json(const TopologyGraph& g);
TopologyGraph graph_from_json(const nlohmann::json& j);

// Named fixtures, looked up by the CLI and by topology configs.
// "paper-fig5" is the reserved name of the bundled 9+1 node example.
std::vector<std::string> fixture_names();
TopologyGraph fixture_by_name(const std::string& name);

}  // namespace mobisim
