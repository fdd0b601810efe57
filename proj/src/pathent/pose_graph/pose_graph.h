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


#ifndef PATHENT_POSE_GRAPH_POSE_GRAPH_H_
#define PATHENT_POSE_GRAPH_POSE_GRAPH_H_

#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "Eigen/Core"

namespace pathent {

class NotPositiveDefinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps to (-pi, pi].
double NormalizeAngle(double theta);

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
};

// Pose of `b` expressed in the frame of `a`.
Pose2 RelativePose(const Pose2& a, const Pose2& b);

enum class EdgeKind { kOdometry, kLoopClosure };

const char* EdgeKindName(EdgeKind kind);

struct PoseNode {
  int id = 0;
  Pose2 pose;
};

struct PoseEdge {
  int from = 0;
  int to = 0;
  Eigen::Matrix3d info = Eigen::Matrix3d::Identity();
  EdgeKind kind = EdgeKind::kOdometry;
  double d_optimality = 1.0;  // cached EdgeDOptimality(info)
};

// Fisher information assigned to new edges.
struct NoiseModel {
  Eigen::Matrix3d odometry = Eigen::Vector3d(100.0, 100.0, 400.0).asDiagonal();
  Eigen::Matrix3d loop_closure =
      Eigen::Vector3d(400.0, 400.0, 1600.0).asDiagonal();

  // Throws NotPositiveDefinite if either matrix is not SPD.
  void Validate() const;
};

// Geometric mean of the eigenvalues of a 3x3 SPD information matrix. Throws
// NotPositiveDefinite for asymmetric (|A - A^T| >= 1e-9) or non-SPD input.
double EdgeDOptimality(const Eigen::Matrix3d& info);

// Undirected multigraph on nodes 0..node_count-1 with positive edge weights.
// All spectral metrics are defined on this form.
struct WeightedEdge {
  int a = 0;
  int b = 0;
  double weight = 1.0;
};

struct WeightedGraph {
  int node_count = 0;
  std::vector<WeightedEdge> edges;

  // Throws std::invalid_argument for self loops, bad ids or weight <= 0.
  void AddEdge(int a, int b, double weight);
};

class PoseGraph {
 public:
  // Returns the new node id (ids are dense from 0).
  int AddNode(const Pose2& pose);
  // Validates endpoints and the information matrix; returns the edge index.
  int AddEdge(int from, int to, const Eigen::Matrix3d& info, EdgeKind kind);

  const std::vector<PoseNode>& nodes() const { return nodes_; }
  const std::vector<PoseEdge>& edges() const { return edges_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const PoseNode& node(int id) const { return nodes_.at(id); }

  // Edge weights are the cached D-optimality values.
  WeightedGraph ToWeighted() const;

  // g2o-style text. One line per node:
  //   VERTEX_SE2 id x y theta
  // then one line per edge, measurement taken from the stored poses:
  //   EDGE_SE2 from to dx dy dtheta I11 I12 I13 I22 I23 I33
  void WriteG2o(std::ostream& out) const;
  // Inverse of WriteG2o; edge kinds are inferred (consecutive ids are
  // odometry, everything else a loop closure). Throws std::invalid_argument on
  // malformed input.
  static PoseGraph ReadG2o(std::istream& in);

 private:
  std::vector<PoseNode> nodes_;
  std::vector<PoseEdge> edges_;
};

bool IsConnected(const WeightedGraph& graph);

// L_w = D_w - A_w; parallel edges add up.
Eigen::MatrixXd WeightedLaplacian(const WeightedGraph& graph);

// log t_w(G): log-determinant of the Laplacian with node 0's row and column
// removed. Throws DisconnectedGraph for a disconnected graph and
// std::runtime_error if the factorization fails. A single node gives 0.
double LogSpanningTrees(const WeightedGraph& graph);

// Second-smallest Laplacian eigenvalue, clamped at 0. Requires >= 2 nodes.
double AlgebraicConnectivity(const WeightedGraph& graph);

// 2|E| / |V|. Requires >= 1 node.
double AverageDegree(const WeightedGraph& graph);

// log t_w / (|V| - 1). Requires >= 2 nodes and a connected graph.
double NormalizedTreeConnectivity(const WeightedGraph& graph);

// Mean edge D-optimality. Throws std::invalid_argument with no edges.
double GraphUncertainty(const PoseGraph& graph);
// (min, max) edge D-optimality. Throws std::invalid_argument with no edges.
std::pair<double, double> DOptimalityRange(const PoseGraph& graph);

inline double LogSpanningTrees(const PoseGraph& g) {
  return LogSpanningTrees(g.ToWeighted());
}
inline double AlgebraicConnectivity(const PoseGraph& g) {
  return AlgebraicConnectivity(g.ToWeighted());
}
inline double AverageDegree(const PoseGraph& g) {
  return AverageDegree(g.ToWeighted());
}
inline double NormalizedTreeConnectivity(const PoseGraph& g) {
  return NormalizedTreeConnectivity(g.ToWeighted());
}

}  // namespace pathent

#endif  // PATHENT_POSE_GRAPH_POSE_GRAPH_H_
