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


#include "pathent/utility/utility.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "pathent/common/csv.h"

namespace pathent {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Slack for accumulated travel compared against node_spacing.
constexpr double kSpacingSlack = 1e-9;

double PoseDistance(const Pose2& a, const Pose2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// True if `a` should win over `b` on a tie of the primary key.
bool TieBreak(const CandidateScore& a, const CandidateScore& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  return RowMajorLess(a.frontier.centroid, b.frontier.centroid);
}

template <typename Key>
std::optional<std::size_t> ArgMax(const std::vector<CandidateScore>& scores,
                                  Key key) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!scores[i].reachable) continue;
    if (!best) {
      best = i;
      continue;
    }
    const double ki = key(scores[i]);
    const double kb = key(scores[*best]);
    if (ki > kb || (ki == kb && TieBreak(scores[i], scores[*best]))) best = i;
  }
  return best;
}

}  // namespace

void GraphGrowthParams::Validate() const {
  if (!(node_spacing > 0.0)) {
    throw std::invalid_argument("node_spacing must be > 0");
  }
  if (!(loop_closure_radius > 0.0)) {
    throw std::invalid_argument("loop_closure_radius must be > 0");
  }
  if (loop_min_gap < 2) {
    throw std::invalid_argument("loop_min_gap must be >= 2");
  }
  noise.Validate();
}

std::optional<int> FindLoopClosure(
    const PoseGraph& graph, int node_id, int candidate_end,
    const GraphGrowthParams& params,
    const std::function<bool(const Pose2&, const Pose2&)>& visible) {
  const Pose2& p = graph.node(node_id).pose;
  const int last = std::min(candidate_end, node_id - params.loop_min_gap + 1);
  std::optional<int> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (int j = 0; j < last; ++j) {
    const Pose2& q = graph.node(j).pose;
    const double d = PoseDistance(p, q);
    if (d > params.loop_closure_radius || d >= best_d) continue;
    if (visible && !visible(p, q)) continue;
    best = j;
    best_d = d;
  }
  return best;
}

void UtilityParams::Validate() const {
  if (!(lambda_decay > 0.0)) {
    throw std::invalid_argument("lambda_decay must be > 0");
  }
  entropy.Validate();
  growth.Validate();
  planner.Validate();
}

double Decay(double distance, double lambda) {
  if (distance < 0.0) throw std::invalid_argument("negative distance");
  return std::exp(-lambda * distance);
}

BetaFactor ComputeBetaFactor(double u1) {
  if (!std::isfinite(u1)) throw std::invalid_argument("u1 must be finite");
  const double whole = std::floor(std::abs(u1));
  int beta = 1;
  if (whole >= 1e18) {
    beta = static_cast<int>(std::floor(std::log10(whole))) + 1;
  } else {
    for (auto v = static_cast<std::uint64_t>(whole); v >= 10; v /= 10) ++beta;
  }
  return {beta, std::pow(10.0, beta)};
}

double UtilityU2(double e_n, double k_n, double rho, double gamma) {
  return (1.0 - e_n / k_n) * rho + gamma;
}

PoseGraph PredictGraph(const PoseGraph& graph, const std::vector<Point2>& path,
                       const GraphGrowthParams& params) {
  PoseGraph out = graph;
  const int original = graph.node_count();
  int prev = original - 1;
  double travelled = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double dx = path[i].x - path[i - 1].x;
    const double dy = path[i].y - path[i - 1].y;
    const double step = std::hypot(dx, dy);
    if (step == 0.0) continue;
    travelled += step;
    const bool last = i + 1 == path.size();
    if (travelled + kSpacingSlack < params.node_spacing && !last) continue;
    const int id = out.AddNode({path[i].x, path[i].y, std::atan2(dy, dx)});
    if (prev >= 0) {
      out.AddEdge(prev, id, params.noise.odometry, EdgeKind::kOdometry);
    }
    if (const auto loop = FindLoopClosure(out, id, original, params)) {
      out.AddEdge(*loop, id, params.noise.loop_closure,
                  EdgeKind::kLoopClosure);
    }
    prev = id;
    travelled = 0.0;
  }
  return out;
}

double UtilityU1(const PoseGraph& predicted) {
  return LogSpanningTrees(predicted);
}

std::vector<CandidateScore> ScoreCandidates(
    const OccupancyGrid& grid, const PoseGraph& graph, const Cell& robot,
    const std::vector<FrontierCluster>& frontiers,
    const UtilityParams& params) {
  const PathTree tree(grid, robot, params.planner);
  const double res = grid.resolution();
  std::vector<CandidateScore> scores;
  scores.reserve(frontiers.size());
  for (const FrontierCluster& f : frontiers) {
    CandidateScore s;
    s.frontier = f;
    s.distance = CellDistance(robot, f.centroid) * res;
    const RayPath ray = TracePath(grid, robot, f.centroid,
                                  params.planner.thresholds);
    s.e_n = PathEntropy(ray, params.entropy);
    s.k_n = static_cast<double>(PathCellCount(ray));
    s.gamma = Decay(s.distance, params.lambda_decay);
    auto path = tree.PathTo(f.centroid);
    if (!path) {
      s.u1 = s.rho = s.u2 = s.u_tot = kNaN;
      scores.push_back(std::move(s));
      continue;
    }
    s.reachable = true;
    s.path = std::move(*path);
    s.path_length = PathLengthCells(s.path) * res;

    std::vector<Point2> waypoints;
    waypoints.reserve(s.path.size());
    for (const Cell& c : s.path) waypoints.push_back(grid.CellCenter(c));
    const PoseGraph predicted = PredictGraph(graph, waypoints, params.growth);
    s.predicted_nodes = predicted.node_count() - graph.node_count();
    s.predicted_loops = 0;
    for (int e = graph.edge_count(); e < predicted.edge_count(); ++e) {
      if (predicted.edges()[e].kind == EdgeKind::kLoopClosure) {
        ++s.predicted_loops;
      }
    }
    s.u1 = UtilityU1(predicted);
    const BetaFactor b = ComputeBetaFactor(s.u1);
    s.beta = b.beta;
    s.rho = b.rho;
    s.u2 = UtilityU2(s.e_n, s.k_n, s.rho, s.gamma);
    s.u_tot = s.u1 + s.u2;
    scores.push_back(std::move(s));
  }
  return scores;
}

const char* MethodName(Method method) {
  switch (method) {
    case Method::kFd:
      return "fd";
    case Method::kAgs:
      return "ags";
    case Method::kProposed:
      return "proposed";
  }
  return "?";
}

Method ParseMethod(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "fd") return Method::kFd;
  if (lower == "ags") return Method::kAgs;
  if (lower == "proposed") return Method::kProposed;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected fd, ags or proposed)");
}

std::optional<std::size_t> SelectProposed(
    const std::vector<CandidateScore>& scores) {
  return ArgMax(scores, [](const CandidateScore& s) { return s.u_tot; });
}

std::optional<std::size_t> SelectAgs(
    const std::vector<CandidateScore>& scores) {
  return ArgMax(scores, [](const CandidateScore& s) { return s.u1; });
}

std::optional<std::size_t> SelectFd(const std::vector<CandidateScore>& scores,
                                    const Blacklist& blacklist) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!scores[i].reachable || blacklist.Covers(scores[i].frontier.centroid)) {
      continue;
    }
    if (!best || TieBreak(scores[i], scores[*best])) best = i;
  }
  return best;
}

std::optional<std::size_t> Select(Method method,
                                  const std::vector<CandidateScore>& scores,
                                  const Blacklist& blacklist) {
  switch (method) {
    case Method::kFd:
      return SelectFd(scores, blacklist);
    case Method::kAgs:
      return SelectAgs(scores);
    case Method::kProposed:
      return SelectProposed(scores);
  }
  return std::nullopt;
}

void WriteCandidateCsvHeader(std::ostream& out) {
  CsvWriter(out).Row({"tick", "centroid_x", "centroid_y", "size", "reachable",
                      "distance", "path_length", "e_n", "k_n", "gamma", "u1",
                      "beta", "rho", "u2", "u_tot", "predicted_nodes",
                      "predicted_loops", "selected"});
}

void WriteCandidateCsvRows(std::ostream& out, int tick,
                           const std::vector<CandidateScore>& scores,
                           std::optional<std::size_t> selected) {
  CsvWriter writer(out);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const CandidateScore& s = scores[i];
    writer.Row({std::to_string(tick), std::to_string(s.frontier.centroid.x),
                std::to_string(s.frontier.centroid.y),
                std::to_string(s.frontier.size()), s.reachable ? "1" : "0",
                FormatNumber(s.distance), FormatNumber(s.path_length),
                FormatNumber(s.e_n), FormatNumber(s.k_n),
                FormatNumber(s.gamma), FormatNumber(s.u1),
                s.reachable ? std::to_string(s.beta) : "",
                FormatNumber(s.rho), FormatNumber(s.u2),
                FormatNumber(s.u_tot), std::to_string(s.predicted_nodes),
                std::to_string(s.predicted_loops),
                selected && *selected == i ? "1" : "0"});
  }
}

}  // namespace pathent
