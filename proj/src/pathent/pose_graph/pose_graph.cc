/*
 * Copyright 2026 The pathent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "pathent/pose_graph/pose_graph.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "Eigen/Eigenvalues"
#include "Eigen/SparseCholesky"
#include "Eigen/SparseCore"

namespace pathent {
namespace {

constexpr double kSymmetryTolerance = 1e-9;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

void RequireNodes(const WeightedGraph& graph, int n, const char* what) {
  if (graph.node_count < n) {
    std::ostringstream msg;
    msg << what << " requires at least " << n << " node(s), got "
        << graph.node_count;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double NormalizeAngle(double theta) {
  constexpr double kPi = std::numbers::pi;
  double t = std::remainder(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

Pose2 RelativePose(const Pose2& a, const Pose2& b) {
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return {c * dx + s * dy, -s * dx + c * dy, NormalizeAngle(b.theta - a.theta)};
}

const char* EdgeKindName(EdgeKind kind) {
  return kind == EdgeKind::kOdometry ? "odometry" : "loop_closure";
}

void NoiseModel::Validate() const {
  EdgeDOptimality(odometry);
  EdgeDOptimality(loop_closure);
}

double EdgeDOptimality(const Eigen::Matrix3d& info) {
  if (!info.allFinite()) {
    throw NotPositiveDefinite("information matrix has non-finite entries");
  }
  if ((info - info.transpose()).cwiseAbs().maxCoeff() >= kSymmetryTolerance) {
    throw NotPositiveDefinite("information matrix is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(
      info, Eigen::EigenvaluesOnly);
  const Eigen::Vector3d zeta = solver.eigenvalues();
  if (zeta.minCoeff() <= 0.0) {
    std::ostringstream msg;
    msg << "information matrix is not positive definite (smallest eigenvalue "
        << zeta.minCoeff() << ")";
    throw NotPositiveDefinite(msg.str());
  }
  return std::exp(zeta.array().log().sum() / 3.0);
}

void WeightedGraph::AddEdge(int a, int b, double weight) {
  if (a == b) throw std::invalid_argument("self loop");
  if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("edge weight must be finite and positive");
  }
  edges.push_back({a, b, weight});
}

int PoseGraph::AddNode(const Pose2& pose) {
  const int id = node_count();
  nodes_.push_back({id, {pose.x, pose.y, NormalizeAngle(pose.theta)}});
  return id;
}

int PoseGraph::AddEdge(int from, int to, const Eigen::Matrix3d& info,
                       EdgeKind kind) {
  if (from == to) throw std::invalid_argument("pose edge from == to");
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count()) {
    throw std::invalid_argument("pose edge endpoint does not exist");
  }
  const double d_opt = EdgeDOptimality(info);
  edges_.push_back({from, to, info, kind, d_opt});
  return edge_count() - 1;
}

WeightedGraph PoseGraph::ToWeighted() const {
  WeightedGraph g;
  g.node_count = node_count();
  g.edges.reserve(edges_.size());
  for (const PoseEdge& e : edges_) g.edges.push_back({e.from, e.to, e.d_optimality});
  return g;
}

void PoseGraph::WriteG2o(std::ostream& out) const {
  const auto old_precision = out.precision(17);
  for (const PoseNode& n : nodes_) {
    out << "VERTEX_SE2 " << n.id << ' ' << n.pose.x << ' ' << n.pose.y << ' '
        << n.pose.theta << '\n';
  }
  for (const PoseEdge& e : edges_) {
    const Pose2 d = RelativePose(nodes_[e.from].pose, nodes_[e.to].pose);
    const Eigen::Matrix3d& I = e.info;
    out << "EDGE_SE2 " << e.from << ' ' << e.to << ' ' << d.x << ' ' << d.y
        << ' ' << d.theta << ' ' << I(0, 0) << ' ' << I(0, 1) << ' '
        << I(0, 2) << ' ' << I(1, 1) << ' ' << I(1, 2) << ' ' << I(2, 2)
        << '\n';
  }
  out.precision(old_precision);
}

PoseGraph PoseGraph::ReadG2o(std::istream& in) {
  PoseGraph graph;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    const auto fail = [line_no](const std::string& why) {
      std::ostringstream msg;
      msg << "g2o line " << line_no << ": " << why;
      return std::invalid_argument(msg.str());
    };
    if (tag == "VERTEX_SE2") {
      int id;
      Pose2 p;
      if (!(fields >> id >> p.x >> p.y >> p.theta)) throw fail("bad vertex");
      if (id != graph.node_count()) throw fail("vertex ids must be dense");
      graph.AddNode(p);
    } else if (tag == "EDGE_SE2") {
      int from, to;
      double dx, dy, dt, i11, i12, i13, i22, i23, i33;
      if (!(fields >> from >> to >> dx >> dy >> dt >> i11 >> i12 >> i13 >>
            i22 >> i23 >> i33)) {
        throw fail("bad edge");
      }
      Eigen::Matrix3d info;
      info << i11, i12, i13, i12, i22, i23, i13, i23, i33;
      graph.AddEdge(from, to, info,
                    std::abs(to - from) == 1 ? EdgeKind::kOdometry
                                             : EdgeKind::kLoopClosure);
    } else {
      throw fail("unknown record " + tag);
    }
  }
  return graph;
}

bool IsConnected(const WeightedGraph& graph) {
  if (graph.node_count <= 1) return true;
  UnionFind uf(graph.node_count);
  int components = graph.node_count;
  for (const WeightedEdge& e : graph.edges) {
    if (uf.Union(e.a, e.b)) --components;
  }
  return components == 1;
}

Eigen::MatrixXd WeightedLaplacian(const WeightedGraph& graph) {
  RequireNodes(graph, 1, "WeightedLaplacian");
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(graph.node_count, graph.node_count);
  for (const WeightedEdge& e : graph.edges) {
    L(e.a, e.a) += e.weight;
    L(e.b, e.b) += e.weight;
    L(e.a, e.b) -= e.weight;
    L(e.b, e.a) -= e.weight;
  }
  return L;
}

double LogSpanningTrees(const WeightedGraph& graph) {
  RequireNodes(graph, 1, "LogSpanningTrees");
  if (!IsConnected(graph)) {
    throw DisconnectedGraph("spanning-tree count of a disconnected graph");
  }
  const int n = graph.node_count - 1;
  if (n == 0) return 0.0;

  // Reduced Laplacian: drop node 0, shift the remaining ids down by one.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(graph.edges.size() * 4);
  for (const WeightedEdge& e : graph.edges) {
    const int a = e.a - 1;
    const int b = e.b - 1;
    if (a >= 0) triplets.emplace_back(a, a, e.weight);
    if (b >= 0) triplets.emplace_back(b, b, e.weight);
    if (a >= 0 && b >= 0) {
      triplets.emplace_back(a, b, -e.weight);
      triplets.emplace_back(b, a, -e.weight);
    }
  }
  Eigen::SparseMatrix<double> reduced(n, n);
  reduced.setFromTriplets(triplets.begin(), triplets.end());

  const Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(reduced);
  if (ldlt.info() != Eigen::Success) {
    throw std::runtime_error("reduced Laplacian factorization failed");
  }
  const Eigen::VectorXd d = ldlt.vectorD();
  if (d.minCoeff() <= 0.0) {
    throw std::runtime_error(
        "reduced Laplacian is numerically singular despite connectivity");
  }
  return d.array().log().sum();
}

double AlgebraicConnectivity(const WeightedGraph& graph) {
  RequireNodes(graph, 2, "AlgebraicConnectivity");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      WeightedLaplacian(graph), Eigen::EigenvaluesOnly);
  return std::max(0.0, solver.eigenvalues()(1));
}

double AverageDegree(const WeightedGraph& graph) {
  RequireNodes(graph, 1, "AverageDegree");
  return 2.0 * static_cast<double>(graph.edges.size()) /
         static_cast<double>(graph.node_count);
}

double NormalizedTreeConnectivity(const WeightedGraph& graph) {
  RequireNodes(graph, 2, "NormalizedTreeConnectivity");
  return LogSpanningTrees(graph) / static_cast<double>(graph.node_count - 1);
}

double GraphUncertainty(const PoseGraph& graph) {
  if (graph.edges().empty()) {
    throw std::invalid_argument("graph uncertainty of a graph without edges");
  }
  double sum = 0.0;
  for (const PoseEdge& e : graph.edges()) sum += e.d_optimality;
  return sum / static_cast<double>(graph.edge_count());
}

std::pair<double, double> DOptimalityRange(const PoseGraph& graph) {
  if (graph.edges().empty()) {
    throw std::invalid_argument("D-optimality range of a graph without edges");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const PoseEdge& e : graph.edges()) {
    lo = std::min(lo, e.d_optimality);
    hi = std::max(hi, e.d_optimality);
  }
  return {lo, hi};
}

}  // namespace pathent
