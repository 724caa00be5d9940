#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "mobisim/rng.hpp"
#include "mobisim/topology.hpp"

namespace mobisim {

// Whether a node may "move" to itself. WITH_SELF_LOOP is the directional
// model p = 1/(|N_k|+1) over neighbors and self; WITHOUT_SELF_LOOP is the
// plain random walk p = 1/|N_k| over neighbors.
enum class Convention { WITH_SELF_LOOP, WITHOUT_SELF_LOOP };

// Row-stochastic direction probabilities over the graph's walk nodes.
// Degrees count walkable neighbors only: the anchor and any non-walk node
// are not valid mobile destinations.
struct DirectionMatrix {
  Convention convention = Convention::WITH_SELF_LOOP;
  std::vector<NodeId> nodes;             // walk node ids, ascending
  Eigen::MatrixXd p;                     // square over `nodes`
  std::vector<int> row_of;               // node id -> row index, -1 if absent
  std::vector<std::vector<int>> move_rows;  // per row: row indices of mobile neighbors

  int size() const { return static_cast<int>(nodes.size()); }
  int row(NodeId k) const { return row_of.at(k); }
  int mobile_degree(int row) const { return static_cast<int>(move_rows[row].size()); }
  // the common per-neighbor direction probability of a row
  double out_probability(int row) const { return p(row, move_rows[row].front()); }
};

DirectionMatrix direction_matrix(const TopologyGraph& g, Convention convention);

// Unique stationary vector of P (solves pi = pi P by LU factorization).
Eigen::VectorXd stationary(const DirectionMatrix& P);

// Same vector via damped power iteration; NoConvergence past the cap.
Eigen::VectorXd stationary_power_iteration(const DirectionMatrix& P,
                                           int max_iterations = 100000,
                                           double tolerance = 1e-13);

struct BalanceReport {
  double max_residual = 0.0;
  bool balanced = false;
};

// Evaluates the global balance equation |N_k| pi_k p_k mu against the total
// inbound flow at every state; balanced iff the max residual is <= 1e-9.
BalanceReport verify_balance(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                             double mu);

struct MobilityRate {
  double mu = 0.0;               // cell-border crossings per second
  double residence_time_s = 0.0; // = 1 / mu
};

// Mean cell residence time = mean chord length of the circular cell
// (pi * r / 2) divided by speed; mu is its reciprocal.
MobilityRate mobility_rate(double speed_mps, double cell_radius_m);

constexpr double kMetersPerMile = 1609.344;
constexpr double mph_to_mps(double mph) { return mph * kMetersPerMile / 3600.0; }

enum class DwellModel { EXPONENTIAL, DETERMINISTIC };

struct Visit {
  NodeId node = 0;
  double dwell_s = 0.0;
};
using Trajectory = std::vector<Visit>;

// Random-walk trajectory until the accumulated dwell reaches duration_s.
// Self-loop draws extend the current visit instead of emitting a new one, so
// consecutive visits are always at adjacent nodes. Start defaults to a
// uniform draw over the walk nodes.
Trajectory sample_trajectory(RngStream& rng, const DirectionMatrix& P, double mu,
                             double duration_s,
                             std::optional<NodeId> start = std::nullopt,
                             DwellModel dwell = DwellModel::EXPONENTIAL);

// Row-major CSV with 12 significant digits, for external cross-checking.
std::string matrix_to_csv(const Eigen::MatrixXd& m);
std::string vector_to_csv(const Eigen::VectorXd& v);

}  // namespace mobisim
