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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any fails.
//
//   acceptance <pathent-cli> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pathent/experiment/batch.h"
#include "pathent/grid_map/map_metrics.h"
#include "pathent/metrics/trace.h"
#include "pathent/pose_graph/pose_graph.h"
#include "pathent/raycast/bresenham.h"
#include "pathent/raycast/path_entropy.h"
#include "pathent/simd/kernels.h"
#include "pathent/simulator/exploration.h"
#include "pathent/simulator/synthetic_maps.h"
#include "pathent/testing/graph_oracles.h"
#include "pathent/testing/planner_oracles.h"
#include "pathent/utility/utility.h"

namespace pathent {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Appends to `detail` and clears `pass` when `ok` is false.
void Expect(Outcome& out, bool ok, const std::string& what) {
  if (ok) return;
  out.pass = false;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += what;
}

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

Outcome MatrixTree() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int graphs = 0;
  const auto check = [&](const WeightedGraph& g) {
    const double expected = testing::EnumerateSpanningTrees(g);
    const double got = std::exp(LogSpanningTrees(g));
    worst = std::max(worst, std::abs(got - expected) / expected);
    ++graphs;
  };
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t masks = 1u << testing::PairCount(n);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      const WeightedGraph g = testing::GraphFromMask(n, mask);
      if (testing::ComponentCount(g) == 1) check(g);
    }
  }
  const int unit = graphs;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> weight(0.1, 10.0);
  for (int k = 0; k < 100;) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int pairs = testing::PairCount(n);
    std::vector<double> weights(static_cast<std::size_t>(pairs));
    for (double& w : weights) w = weight(rng);
    const auto mask = static_cast<std::uint32_t>(rng() % (1u << pairs));
    const WeightedGraph g = testing::GraphFromMask(n, mask, weights);
    if (testing::ComponentCount(g) != 1) continue;
    check(g);
    ++k;
  }
  const double secs = Seconds(start);
  Expect(out, worst <= 1e-9, Fmt("max relative error %.3g", worst));
  Expect(out, secs < 10.0, Fmt("took %.2f s", secs));
  out.detail = std::to_string(unit) + " unit + " +
               std::to_string(graphs - unit) + " weighted graphs, " +
               Fmt("max rel err %.2g, %.3f s", worst, secs) +
               (out.detail.empty() ? "" : " [" + out.detail + "]");
  return out;
}

Outcome Spectral() {
  Outcome out;
  WeightedGraph p3{3, {}};
  p3.AddEdge(0, 1, 1.0);
  p3.AddEdge(1, 2, 1.0);
  WeightedGraph k4{4, {}};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.AddEdge(a, b, 1.0);
  WeightedGraph split{4, {}};
  split.AddEdge(0, 1, 1.0);
  split.AddEdge(2, 3, 1.0);
  const double l_p3 = AlgebraicConnectivity(p3);
  const double l_k4 = AlgebraicConnectivity(k4);
  const double l_split = AlgebraicConnectivity(split);
  Expect(out, std::abs(l_p3 - 1.0) <= 1e-9, Fmt("P3 %.12g", l_p3));
  Expect(out, std::abs(l_k4 - 4.0) <= 1e-9, Fmt("K4 %.12g", l_k4));
  Expect(out, std::abs(l_split) <= 1e-9, Fmt("split %.12g", l_split));

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> weight(0.1, 10.0);
  int agree = 0;
  int connected = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % (testing::PairCount(n) + 1));
    const WeightedGraph g = testing::RandomGraph(rng, n, m, weight);
    const bool uf = testing::ComponentCount(g) == 1;
    connected += uf;
    agree += (AlgebraicConnectivity(g) > 1e-9) == uf;
  }
  Expect(out, agree == 200, std::to_string(200 - agree) + " disagreements");
  out.detail = Fmt("P3 %.12g, K4 %.12g, split %.3g", l_p3, l_k4, l_split) +
               "; " + std::to_string(agree) + "/200 agree (" +
               std::to_string(connected) + " connected)" +
               (out.pass ? "" : " [" + out.detail + "]");
  return out;
}

Outcome Entropy() {
  Outcome out;
  const double h5 = CellEntropy(0.5);
  const double h1 = CellEntropy(0.1);
  const double h45 = CellEntropy(0.45);
  Expect(out, h5 == 1.0, "h(0.5) not exactly 1");
  Expect(out, std::abs(h1 - 0.46900) <= 1e-4, "h(0.1)");
  Expect(out, std::abs(h45 - 0.99277) <= 1e-4, "h(0.45)");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> p(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = p(rng);
    worst = std::max(worst, std::abs(CellEntropy(x) - CellEntropy(1.0 - x)));
  }
  Expect(out, worst <= 1e-12, Fmt("symmetry error %.3g", worst));
  out.detail = Fmt("h(0.5)=%.17g h(0.1)=%.6f h(0.45)=%.6f", h5, h1, h45) +
               Fmt(", max |h(p)-h(1-p)| %.2g", worst) +
               (out.pass ? "" : " [" + out.detail + "]");
  return out;
}

double PercentR(const std::vector<double>& series) {
  Trace trace;
  for (std::size_t i = 0; i < series.size(); ++i) {
    TickRecord r;
    r.tick = static_cast<int>(i);
    r.graph_uncertainty = series[i];
    trace.push_back(r);
  }
  const OccupancyGrid map = MakeRoom(8, 8);
  return Summarize(trace, map, map, "x", 0, "x").percent_r;
}

Outcome UncertaintyReductionRows() {
  Outcome out;
  const double a = PercentR({4800, 3500, 2600, 3100});
  const double b = PercentR({3000, 3700, 2900});
  Expect(out, std::abs(a - 45.0) <= 1.0, "first row");
  Expect(out, std::abs(b - 21.0) <= 2.0, "second row");
  out.detail = Fmt("(4800,2600) -> %.4f, (3700,2900) -> %.4f", a, b) +
               (out.pass ? "" : " [" + out.detail + "]");
  return out;
}

FrontierCluster Singleton(const Cell& c) {
  FrontierCluster f;
  f.cells = {c};
  f.centroid = c;
  return f;
}

PoseGraph GraphAt(const OccupancyGrid& grid, const Cell& robot) {
  PoseGraph g;
  const Point2 p = grid.CellCenter(robot);
  g.AddNode({p.x, p.y, 0.0});
  return g;
}

struct Scenario {
  OccupancyGrid grid;
  Cell robot;
  std::vector<FrontierCluster> frontiers;
  std::vector<bool> reachable;  // per frontier, from the reference planner
};

// Random clutter with unknown patches; candidates sit on Free cells clear
// of inflation so the oracle needs no goal special case.
Scenario RandomScenario(std::mt19937_64& rng) {
  while (true) {
    Scenario s{OccupancyGrid(25, 25, 0.1), {}, {}, {}};
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      const auto roll = rng() % 100;
      s.grid.set_raw(s.grid.CellAt(i), roll < 12   ? kOccupiedRaw
                                       : roll < 37 ? kUnknown
                                                   : kFreeRaw);
    }
    const auto clear = [&](const Cell& c) {
      if (s.grid.raw(c) != kFreeRaw) return false;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const Cell n{c.x + dx, c.y + dy};
          if (!s.grid.Contains(n) || s.grid.raw(n) == kOccupiedRaw)
            return false;
        }
      return true;
    };
    std::vector<Cell> open;
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      if (clear(s.grid.CellAt(i))) open.push_back(s.grid.CellAt(i));
    }
    if (open.size() < 8) continue;
    std::shuffle(open.begin(), open.end(), rng);
    s.robot = open[0];
    const int count = 2 + static_cast<int>(rng() % 5);
    for (int k = 1; k <= count; ++k) s.frontiers.push_back(Singleton(open[k]));
    const auto costs = testing::ReferenceCosts(s.grid, s.robot, 1);
    bool any = false;
    for (const auto& f : s.frontiers) {
      s.reachable.push_back(
          testing::ReferenceReachable(s.grid, costs, f.centroid));
      any |= s.reachable.back();
    }
    if (any) return s;
  }
}

Outcome Selectors() {
  Outcome out;
  std::mt19937_64 rng(31);
  int fd_ok = 0;
  int ags_ok = 0;
  int repeat_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = RandomScenario(rng);
    const PoseGraph graph = GraphAt(s.grid, s.robot);
    const auto scores = ScoreCandidates(s.grid, graph, s.robot, s.frontiers);
    const auto fd = SelectFd(scores);
    // Nearest by straight-line distance among the reachable, first in
    // row-major order on ties.
    std::optional<std::size_t> nearest;
    double nearest_d = std::numeric_limits<double>::infinity();
    bool reach_ok = true;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      reach_ok &= scores[i].reachable == s.reachable[i];
      if (!s.reachable[i]) continue;
      const Cell& c = s.frontiers[i].centroid;
      const double d = std::hypot(c.x - s.robot.x, c.y - s.robot.y) * 0.1;
      const bool earlier =
          nearest && (c.y < s.frontiers[*nearest].centroid.y ||
                      (c.y == s.frontiers[*nearest].centroid.y &&
                       c.x < s.frontiers[*nearest].centroid.x));
      if (d < nearest_d - 1e-12 ||
          (std::abs(d - nearest_d) <= 1e-12 && earlier)) {
        nearest = i;
        nearest_d = d;
      }
    }
    fd_ok += reach_ok && fd == nearest;
    // Flip Free and Unknown cells off the robot and candidate cells.
    OccupancyGrid mutated = s.grid;
    for (std::size_t i = 0; i < mutated.size(); ++i) {
      const Cell c = mutated.CellAt(i);
      const std::int8_t raw = mutated.raw(c);
      if (raw == kOccupiedRaw || c == s.robot || rng() % 4 != 0) continue;
      bool is_goal = false;
      for (const auto& f : s.frontiers) is_goal |= f.centroid == c;
      if (!is_goal) mutated.set_raw(c, raw == kUnknown ? kFreeRaw : kUnknown);
    }
    const auto mutated_scores =
        ScoreCandidates(mutated, graph, s.robot, s.frontiers);
    bool same_u1 = SelectAgs(mutated_scores) == SelectAgs(scores);
    for (std::size_t i = 0; i < scores.size(); ++i) {
      same_u1 &= std::isnan(scores[i].u1)
                     ? std::isnan(mutated_scores[i].u1)
                     : scores[i].u1 == mutated_scores[i].u1;
    }
    ags_ok += same_u1;

    const auto again = ScoreCandidates(s.grid, graph, s.robot, s.frontiers);
    repeat_ok += SelectFd(again) == fd &&
                 SelectAgs(again) == SelectAgs(scores) &&
                 SelectProposed(again) == SelectProposed(scores);
  }
  Expect(out, fd_ok == 100, "FD not nearest");
  Expect(out, ags_ok == 100, "AGS changed under mutation");
  Expect(out, repeat_ok == 100, "selection not repeatable");

  // Two candidates mirrored about the robot; only the right-hand straight
  // line crosses unknown cells.
  OccupancyGrid mirror(21, 21, 0.1, {}, kFreeRaw);
  for (int x = 12; x <= 16; ++x) mirror.set_raw({x, 10}, kUnknown);
  const Cell robot{10, 10};
  const auto mirror_scores =
      ScoreCandidates(mirror, GraphAt(mirror, robot), robot,
                      {Singleton({2, 10}), Singleton({18, 10})});
  const auto ags = SelectAgs(mirror_scores);
  const auto proposed = SelectProposed(mirror_scores);
  Expect(out, ags && *ags == 0 && proposed && *proposed == 1,
         "proposed did not flip to the unknown-rich candidate");

  // Whole-run determinism for every method.
  bool runs_same = true;
  for (Method m : {Method::kFd, Method::kAgs, Method::kProposed}) {
    std::ostringstream a;
    std::ostringstream b;
    WriteTraceCsv(a, RunExploration(MakeMultiRoom(2), m, SimConfig{}, 4).trace);
    WriteTraceCsv(b, RunExploration(MakeMultiRoom(2), m, SimConfig{}, 4).trace);
    runs_same &= a.str() == b.str();
  }
  Expect(out, runs_same, "run traces differ");
  const std::string detail = out.detail;
  out.detail = "FD nearest " + std::to_string(fd_ok) + "/100, AGS invariant " +
               std::to_string(ags_ok) + "/100, repeatable " +
               std::to_string(repeat_ok) + "/100, mirror AGS->" +
               (ags ? std::to_string(*ags) : std::string("none")) +
               " proposed->" +
               (proposed ? std::to_string(*proposed) : std::string("none")) +
               (detail.empty() ? "" : " [" + detail + "]");
  return out;
}

Outcome UtilityFormulas() {
  Outcome out;
  const double d0 = Decay(0.0, 0.6);
  const double d1 = Decay(1.0, 0.6);
  const BetaFactor beta = ComputeBetaFactor(523.7);
  const double h_unknown = CellEntropy(0.1);
  const double h_known = CellEntropy(0.45);
  const double u2_unknown = UtilityU2(h_unknown, 1.0, 10.0, 1.0);
  const double u2_known = UtilityU2(h_known, 1.0, 10.0, 1.0);
  Expect(out, d0 == 1.0, "decay(0)");
  Expect(out, std::abs(d1 - 0.5488) <= 1e-4, "decay(1)");
  Expect(out, beta.beta == 3 && beta.rho == 1000.0, "beta factor");
  Expect(out, std::abs(u2_unknown - 6.31) <= 0.01, "U2 unknown cell");
  Expect(out, std::abs(u2_known - 1.072) <= 0.01, "U2 known cell");
  out.detail = Fmt("decay(0)=%.17g decay(1)=%.6f", d0, d1) + ", beta(523.7)=(" +
               std::to_string(beta.beta) + "," + Fmt("%.0f)", beta.rho) +
               Fmt(", U2=%.4f and %.4f", u2_unknown, u2_known) +
               (out.pass ? "" : " [" + out.detail + "]");
  return out;
}

Outcome ClosedRoom() {
  Outcome out;
  std::string detail;
  for (Method m : {Method::kFd, Method::kAgs, Method::kProposed}) {
    const auto start = std::chrono::steady_clock::now();
    const auto run = RunExploration(MakeRoom(15, 15), m, SimConfig{}, 1);
    const double secs = Seconds(start);
    bool entropy_ok = true;
    for (std::size_t i = 1; i < run.trace.size(); ++i) {
      entropy_ok &= run.trace[i].map_entropy <= run.trace[i - 1].map_entropy;
    }
    const TickRecord& last = run.trace.back();
    const std::string name = MethodName(m);
    Expect(out, run.status == ExplorationStatus::kCompleted,
           name + " " + StatusName(run.status));
    Expect(out, last.coverage > 95.0, name + " coverage");
    Expect(out, last.tick <= 50, name + " ticks");
    Expect(out, entropy_ok, name + " entropy increased");
    Expect(out, secs < 5.0, name + " too slow");
    if (!detail.empty()) detail += ", ";
    detail += name + " " + StatusName(run.status) + " " +
              Fmt("%.2f%% tick %.0f %.3f s", last.coverage, last.tick, secs);
  }
  out.detail = detail + (out.pass ? "" : " [" + out.detail + "]");
  return out;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome MultiRoomCoverage() {
  Outcome out;
  const OccupancyGrid truth = MakeMultiRoom(1);
  SimConfig config;
  config.tick_budget = 150;
  std::vector<double> fd;
  std::vector<double> proposed;
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    fd.push_back(
        RunExploration(truth, Method::kFd, config, seed).trace.back().coverage);
    proposed.push_back(RunExploration(truth, Method::kProposed, config, seed)
                           .trace.back()
                           .coverage);
    wins += proposed.back() >= fd.back();
  }
  const double m_fd = Median(fd);
  const double m_proposed = Median(proposed);
  Expect(out, m_proposed >= m_fd, "median");
  Expect(out, wins >= 7, "per-seed");
  out.detail = Fmt("median proposed %.4f%% vs fd %.4f%%", m_proposed, m_fd) +
               ", proposed >= fd in " + std::to_string(wins) + "/10 seeds" +
               (out.pass ? "" : " [" + out.detail + "]");
  return out;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Relative path -> contents of every file under `dir` except config.txt.
std::vector<std::pair<std::string, std::string>> Tree(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file() || e.path().filename() == "config.txt") continue;
    files.emplace_back(fs::relative(e.path(), dir).string(), Slurp(e.path()));
  }
  std::sort(files.begin(), files.end());
  return files;
}

Outcome CompareDeterminism(const std::string& cli, const fs::path& scratch) {
  Outcome out;
  const fs::path root = scratch / "determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  const auto compare = [&](const std::string& name, int jobs) {
    const std::string cmd = "\"" + cli +
                            "\" compare --map multiroom:1 --methods "
                            "fd,ags,proposed --seeds 1-3 --jobs " +
                            std::to_string(jobs) + " --output \"" +
                            (root / name).string() + "\" > \"" +
                            (root / (name + ".stdout")).string() + "\"";
    return std::system(cmd.c_str()) == 0;
  };
  const bool ran = compare("serial_a", 1) && compare("serial_b", 1) &&
                   compare("parallel", 3);
  Expect(out, ran, "compare failed");
  if (!ran) return out;
  const auto a = Tree(root / "serial_a");
  const bool repeat =
      a == Tree(root / "serial_b") &&
      Slurp(root / "serial_a.stdout") == Slurp(root / "serial_b.stdout");
  const bool parallel =
      a == Tree(root / "parallel") &&
      Slurp(root / "serial_a.stdout") == Slurp(root / "parallel.stdout");
  Expect(out, repeat, "repeat differs");
  Expect(out, parallel, "parallel differs");
  std::size_t rows = 0;
  for (char c : Slurp(root / "serial_a" / "summary.csv")) rows += c == '\n';
  Expect(out, rows == 10, "summary rows");
  out.detail = std::to_string(a.size()) + " files, " +
               std::to_string(rows - 1) + " summary rows; repeat " +
               (repeat ? "identical" : "differs") + ", jobs=3 vs jobs=1 " +
               (parallel ? "identical" : "differs");
  return out;
}

Outcome BresenhamProperties() {
  Outcome out;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> coord(-1000, 1000);
  int good = 0;
  for (int i = 0; i < 1000; ++i) {
    const Cell a{coord(rng), coord(rng)};
    const Cell b{coord(rng), coord(rng)};
    const auto line = Bresenham(a, b);
    bool ok = line.front() == a && line.back() == b &&
              static_cast<int>(line.size()) ==
                  std::max(std::abs(b.x - a.x), std::abs(b.y - a.y)) + 1;
    for (std::size_t k = 1; k < line.size(); ++k) {
      ok &= std::max(std::abs(line[k].x - line[k - 1].x),
                     std::abs(line[k].y - line[k - 1].y)) == 1;
    }
    good += ok;
  }
  Expect(out, good == 1000, "violations");
  out.detail = std::to_string(good) + "/1000 pairs satisfy all properties";
  return out;
}

int Main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <pathent-cli> <scratch-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path scratch = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"matrix-tree", MatrixTree},
      {"spectral", Spectral},
      {"entropy", Entropy},
      {"uncertainty-reduction", UncertaintyReductionRows},
      {"selectors", Selectors},
      {"utility-formulas", UtilityFormulas},
      {"closed-room", ClosedRoom},
      {"multi-room-coverage", MultiRoomCoverage},
      {"compare-determinism", [&] { return CompareDeterminism(cli, scratch); }},
      {"bresenham", BresenhamProperties}};
  std::printf("kernels: %s\n",
              std::string(simd::IsaName(simd::ActiveIsa())).c_str());
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %-22s %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                checks[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", checks.size() - failed,
              checks.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pathent

int main(int argc, char** argv) { return pathent::Main(argc, argv); }
