#include "mobisim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>

namespace mobisim {

namespace {

void check_walk_connected(const DirectionMatrix& P) {
  const int n = P.size();
  if (n == 0) fail(Errc::ConfigInvalid, "no walk nodes");
  std::vector<int> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : P.move_rows[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
    }
  }
  require(count == n, Errc::DisconnectedGraph,
          "walk subgraph is not connected; the direction chain is reducible");
}

}  // namespace

DirectionMatrix direction_matrix(const TopologyGraph& g, Convention convention) {
  DirectionMatrix P;
  P.convention = convention;
  P.nodes = g.walk_nodes;
  const int n = P.size();
  require(n >= 1, Errc::ConfigInvalid, "graph has no walk nodes");
  P.row_of.assign(g.node_count, -1);
  for (int i = 0; i < n; ++i) P.row_of[P.nodes[i]] = i;
  P.p = Eigen::MatrixXd::Zero(n, n);
  P.move_rows.resize(n);
  for (int i = 0; i < n; ++i) {
    for (NodeId v : g.neighbors(P.nodes[i])) {
      const int j = P.row_of[v];
      if (j >= 0) P.move_rows[i].push_back(j);
    }
    const int deg = static_cast<int>(P.move_rows[i].size());
    require(deg >= 1 || n == 1, Errc::IsolatedNode,
            "walk node " + std::to_string(P.nodes[i]) + " has no mobile neighbor");
    if (convention == Convention::WITH_SELF_LOOP) {
      const double w = 1.0 / (deg + 1);
      P.p(i, i) = w;
      for (int j : P.move_rows[i]) P.p(i, j) = w;
    } else {
      require(deg >= 1, Errc::IsolatedNode, "isolated walk node");
      const double w = 1.0 / deg;
      for (int j : P.move_rows[i]) P.p(i, j) = w;
    }
  }
  if (n > 1) check_walk_connected(P);
  return P;
}

Eigen::VectorXd stationary(const DirectionMatrix& P) {
  const int n = P.size();
  if (n == 1) return Eigen::VectorXd::Ones(1);
  // (P^T - I) pi = 0 with the last balance row replaced by sum(pi) = 1
  Eigen::MatrixXd m = P.p.transpose() - Eigen::MatrixXd::Identity(n, n);
  m.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;
  Eigen::VectorXd pi = m.partialPivLu().solve(rhs);
  pi = pi.cwiseMax(0.0);
  pi /= pi.sum();
  const double residual = (P.p.transpose() * pi - pi).cwiseAbs().maxCoeff();
  require(residual <= 1e-10, Errc::NoConvergence,
          "stationary solve residual " + std::to_string(residual));
  return pi;
}

Eigen::VectorXd stationary_power_iteration(const DirectionMatrix& P,
                                           int max_iterations, double tolerance) {
  const int n = P.size();
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
  // lazy kernel (P + I)/2 keeps the iteration aperiodic on bipartite walks
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd next = 0.5 * (P.p.transpose() * pi + pi);
    next /= next.sum();
    const double delta = (next - pi).cwiseAbs().maxCoeff();
    pi = next;
    if (delta <= tolerance) return pi;
  }
  fail(Errc::NoConvergence, "power iteration did not converge in " +
                                std::to_string(max_iterations) + " iterations");
}

BalanceReport verify_balance(const DirectionMatrix& P, const Eigen::VectorXd& pi,
                             double mu) {
  require(pi.size() == P.size(), Errc::DimensionMismatch,
          "stationary vector does not match direction matrix");
  BalanceReport report;
  for (int k = 0; k < P.size(); ++k) {
    if (P.move_rows[k].empty()) continue;
    const double outflow = P.mobile_degree(k) * pi(k) * P.out_probability(k) * mu;
    double inflow = 0.0;
    for (int j : P.move_rows[k]) inflow += pi(j) * P.p(j, k) * mu;
    report.max_residual = std::max(report.max_residual, std::abs(outflow - inflow));
  }
  report.balanced = report.max_residual <= 1e-9;
  return report;
}

MobilityRate mobility_rate(double speed_mps, double cell_radius_m) {
  require(speed_mps > 0, Errc::NonPositiveInput, "speed must be > 0");
  require(cell_radius_m > 0, Errc::NonPositiveInput, "cell radius must be > 0");
  MobilityRate rate;
  rate.residence_time_s = (M_PI * cell_radius_m / 2.0) / speed_mps;
  rate.mu = 1.0 / rate.residence_time_s;
  return rate;
}

Trajectory sample_trajectory(RngStream& rng, const DirectionMatrix& P, double mu,
                             double duration_s, std::optional<NodeId> start,
                             DwellModel dwell) {
  require(duration_s > 0, Errc::NonPositiveInput, "duration must be > 0");
  require(mu > 0, Errc::NonPositiveInput, "mobility rate must be > 0");
  int row;
  if (start) {
    row = P.row(*start);
    require(row >= 0, Errc::InvalidNode, "start node is not walkable");
  } else {
    row = static_cast<int>(rng.bounded(P.size()));
  }
  auto draw_dwell = [&] {
    return dwell == DwellModel::EXPONENTIAL ? rng.exponential(mu) : 1.0 / mu;
  };
  Trajectory traj;
  double elapsed = 0.0;
  double current_dwell = draw_dwell();
  if (P.size() == 1) {
    while (current_dwell < duration_s) current_dwell += draw_dwell();
    return {{P.nodes[0], current_dwell}};
  }
  while (true) {
    if (elapsed + current_dwell >= duration_s) {
      traj.push_back({P.nodes[row], current_dwell});
      return traj;
    }
    if (P.convention == Convention::WITH_SELF_LOOP) {
      const auto pick = rng.bounded(P.mobile_degree(row) + 1);
      if (pick == static_cast<std::uint64_t>(P.mobile_degree(row))) {
        current_dwell += draw_dwell();  // self draw: stay for another period
        continue;
      }
      traj.push_back({P.nodes[row], current_dwell});
      elapsed += current_dwell;
      row = P.move_rows[row][pick];
    } else {
      traj.push_back({P.nodes[row], current_dwell});
      elapsed += current_dwell;
      row = P.move_rows[row][rng.bounded(P.mobile_degree(row))];
    }
    current_dwell = draw_dwell();
  }
}

namespace {
std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_g12(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string vector_to_csv(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_g12(v(i));
  }
  out += '\n';
  return out;
}

}  // namespace mobisim
