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


#ifndef PATHENT_UTILITY_UTILITY_H_
#define PATHENT_UTILITY_UTILITY_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathent/frontier/frontier.h"
#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/occupancy_grid.h"
#include "pathent/pose_graph/pose_graph.h"
#include "pathent/raycast/path_entropy.h"
#include "pathent/simulator/planner.h"

namespace pathent {

// How the pose graph grows as the robot moves. Shared by the simulator (real
// nodes) and by PredictGraph (hallucinated nodes).
struct GraphGrowthParams {
  double node_spacing = 0.5;         // meters
  double loop_closure_radius = 1.0;  // meters
  // A loop closure needs at least this many chain steps between the nodes.
  int loop_min_gap = 5;
  NoiseModel noise;

  void Validate() const;
};

// Earlier node to close a loop with from `node_id`: the nearest node among
// ids [0, candidate_end) that is within the radius and at least loop_min_gap
// ids away, for which `visible` (if given) holds. Ties go to the lower id.
std::optional<int> FindLoopClosure(
    const PoseGraph& graph, int node_id, int candidate_end,
    const GraphGrowthParams& params,
    const std::function<bool(const Pose2&, const Pose2&)>& visible = {});

struct UtilityParams {
  double lambda_decay = 0.6;  // 1/m
  EntropyParams entropy;
  GraphGrowthParams growth;
  PlannerParams planner;

  void Validate() const;
};

// gamma = exp(-lambda * distance).
double Decay(double distance, double lambda);

struct BetaFactor {
  int beta = 1;
  double rho = 10.0;
};
// beta = number of decimal digits of floor(|u1|), at least 1; rho = 10^beta.
BetaFactor ComputeBetaFactor(double u1);

// (1 - e_n / k_n) * rho + gamma.
double UtilityU2(double e_n, double k_n, double rho, double gamma);

// Copy of `graph` extended along `path` (world points, starting at the robot):
// a node every node_spacing meters of travel plus one at the end of the path,
// chained by odometry edges from the last existing node, each with at most one
// loop-closure edge to an original node chosen by FindLoopClosure.
PoseGraph PredictGraph(const PoseGraph& graph, const std::vector<Point2>& path,
                       const GraphGrowthParams& params);

// log spanning-tree count of the predicted graph.
double UtilityU1(const PoseGraph& predicted);

struct CandidateScore {
  FrontierCluster frontier;
  bool reachable = false;
  std::vector<Cell> path;     // planned cells, empty if unreachable
  double path_length = 0.0;   // m
  double distance = 0.0;      // Euclidean robot -> centroid, m
  double e_n = 0.0;
  double k_n = 0.0;
  double gamma = 0.0;
  // The fields below are NaN / 0 when unreachable.
  double u1 = 0.0;
  int beta = 0;
  double rho = 0.0;
  double u2 = 0.0;
  double u_tot = 0.0;
  int predicted_nodes = 0;
  int predicted_loops = 0;
};

// Scores every frontier against one Dijkstra tree rooted at the robot cell.
// Output order follows `frontiers`.
std::vector<CandidateScore> ScoreCandidates(
    const OccupancyGrid& grid, const PoseGraph& graph, const Cell& robot,
    const std::vector<FrontierCluster>& frontiers,
    const UtilityParams& params = {});

enum class Method { kFd, kAgs, kProposed };

const char* MethodName(Method method);
// Accepts "fd", "ags" and "proposed" (case-insensitive).
Method ParseMethod(const std::string& name);

// Indices into `scores`; nullopt when no reachable candidate remains.
// Ties: smaller distance, then row-major centroid.
std::optional<std::size_t> SelectProposed(
    const std::vector<CandidateScore>& scores);
std::optional<std::size_t> SelectAgs(const std::vector<CandidateScore>& scores);
// Nearest reachable candidate whose centroid is not blacklisted.
std::optional<std::size_t> SelectFd(const std::vector<CandidateScore>& scores,
                                    const Blacklist& blacklist = {});
std::optional<std::size_t> Select(Method method,
                                  const std::vector<CandidateScore>& scores,
                                  const Blacklist& blacklist = {});

// One CSV row per candidate. Columns:
//   tick,centroid_x,centroid_y,size,reachable,distance,path_length,e_n,k_n,
//   gamma,u1,beta,rho,u2,u_tot,predicted_nodes,predicted_loops,selected
void WriteCandidateCsvHeader(std::ostream& out);
void WriteCandidateCsvRows(std::ostream& out, int tick,
                           const std::vector<CandidateScore>& scores,
                           std::optional<std::size_t> selected);

}  // namespace pathent

#endif  // PATHENT_UTILITY_UTILITY_H_
