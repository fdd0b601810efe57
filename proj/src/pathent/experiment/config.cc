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

#include "pathent/experiment/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace pathent {
namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(Trim(part));
  return parts;
}

template <typename T>
T ParseInteger(const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("not an integer: '" + text + "'");
  }
  return value;
}

double ParseReal(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return value;
}

bool ParseBool(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "true" || lower == "1" || lower == "yes") return true;
  if (lower == "false" || lower == "0" || lower == "no") return false;
  throw ConfigError("not a boolean: '" + text + "'");
}

// Shortest text that parses back to the same double.
std::string FormatReal(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Method ParseMethodOrThrow(const std::string& text) {
  try {
    return ParseMethod(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string FormatDiagonal(const Eigen::Matrix3d& m) {
  return FormatReal(m(0, 0)) + "," + FormatReal(m(1, 1)) + "," +
         FormatReal(m(2, 2));
}

Eigen::Matrix3d ParseDiagonal(const std::string& text) {
  const auto parts = SplitList(text);
  if (parts.size() != 3) {
    throw ConfigError("expected three comma-separated values: '" + text + "'");
  }
  return Eigen::Vector3d(ParseReal(parts[0]), ParseReal(parts[1]),
                         ParseReal(parts[2]))
      .asDiagonal();
}

// `expr` names a field of `c`; it is expanded once in the setter and once in
// the getter.
#define PATHENT_INT_KEY(name, help, expr)                              \
  ConfigKey {                                                          \
    name, help,                                                        \
        [](ExperimentConfig& c, const std::string& v) {                \
          (expr) = ParseInteger<int>(v);                               \
        },                                                             \
        [](const ExperimentConfig& c) { return std::to_string(expr); } \
  }
#define PATHENT_REAL_KEY(name, help, expr)                         \
  ConfigKey {                                                      \
    name, help,                                                    \
        [](ExperimentConfig& c, const std::string& v) {            \
          (expr) = ParseReal(v);                                   \
        },                                                         \
        [](const ExperimentConfig& c) { return FormatReal(expr); } \
  }

std::vector<ConfigKey> BuildKeys() {
  std::vector<ConfigKey> keys;
  keys.push_back({"map", "map file (PGM or YAML), room:W:H or multiroom:SEED",
                  [](ExperimentConfig& c, const std::string& v) { c.map = v; },
                  [](const ExperimentConfig& c) { return c.map; }});
  keys.push_back({"method", "method of a single run: fd, ags or proposed",
                  [](ExperimentConfig& c, const std::string& v) {
                    c.method = ParseMethodOrThrow(v);
                  },
                  [](const ExperimentConfig& c) {
                    return std::string(MethodName(c.method));
                  }});
  keys.push_back(
      {"seed", "seed of a single run",
       [](ExperimentConfig& c, const std::string& v) {
         c.seed = ParseInteger<std::uint64_t>(v);
       },
       [](const ExperimentConfig& c) { return std::to_string(c.seed); }});
  keys.push_back({"methods", "comma-separated methods of a comparison",
                  [](ExperimentConfig& c, const std::string& v) {
                    c.methods.clear();
                    for (const auto& m : SplitList(v)) {
                      c.methods.push_back(ParseMethodOrThrow(m));
                    }
                  },
                  [](const ExperimentConfig& c) {
                    std::string out;
                    for (Method m : c.methods) {
                      if (!out.empty()) out += ",";
                      out += MethodName(m);
                    }
                    return out;
                  }});
  keys.push_back({"seeds", "seeds of a comparison, e.g. 1,2,5-8",
                  [](ExperimentConfig& c, const std::string& v) {
                    c.seeds = ParseSeedList(v);
                  },
                  [](const ExperimentConfig& c) {
                    std::string out;
                    for (std::uint64_t s : c.seeds) {
                      if (!out.empty()) out += ",";
                      out += std::to_string(s);
                    }
                    return out;
                  }});
  keys.push_back(
      PATHENT_INT_KEY("budget", "decision tick budget", c.sim.tick_budget));
  keys.push_back({"start", "start cell x,y; empty lets the seed choose",
                  [](ExperimentConfig& c, const std::string& v) {
                    if (v.empty()) {
                      c.sim.start.reset();
                      return;
                    }
                    const auto parts = SplitList(v);
                    if (parts.size() != 2)
                      throw ConfigError("start must be x,y");
                    c.sim.start = Cell{ParseInteger<int>(parts[0]),
                                       ParseInteger<int>(parts[1])};
                  },
                  [](const ExperimentConfig& c) {
                    if (!c.sim.start) return std::string();
                    return std::to_string(c.sim.start->x) + "," +
                           std::to_string(c.sim.start->y);
                  }});
  keys.push_back(PATHENT_REAL_KEY("p_unk",
                                  "probability substituted for unknown cells",
                                  c.sim.utility.entropy.p_unk));
  keys.push_back(PATHENT_REAL_KEY("p_ofree",
                                  "probability substituted for known cells",
                                  c.sim.utility.entropy.p_ofree));
  keys.push_back(PATHENT_REAL_KEY("lambda", "distance decay rate, 1/m",
                                  c.sim.utility.lambda_decay));
  keys.push_back(PATHENT_REAL_KEY("node_spacing", "pose node spacing, m",
                                  c.sim.utility.growth.node_spacing));
  keys.push_back(PATHENT_REAL_KEY("loop_closure_radius",
                                  "loop closure search radius, m",
                                  c.sim.utility.growth.loop_closure_radius));
  keys.push_back(PATHENT_INT_KEY("loop_min_gap",
                                 "minimum node id gap of a loop closure",
                                 c.sim.utility.growth.loop_min_gap));
  keys.push_back({"odometry_info", "odometry information diagonal xx,yy,tt",
                  [](ExperimentConfig& c, const std::string& v) {
                    c.sim.utility.growth.noise.odometry = ParseDiagonal(v);
                  },
                  [](const ExperimentConfig& c) {
                    return FormatDiagonal(c.sim.utility.growth.noise.odometry);
                  }});
  keys.push_back(
      {"loop_closure_info", "loop closure information diagonal xx,yy,tt",
       [](ExperimentConfig& c, const std::string& v) {
         c.sim.utility.growth.noise.loop_closure = ParseDiagonal(v);
       },
       [](const ExperimentConfig& c) {
         return FormatDiagonal(c.sim.utility.growth.noise.loop_closure);
       }});
  keys.push_back(PATHENT_INT_KEY("inflation_cells", "obstacle inflation, cells",
                                 c.sim.utility.planner.inflation_cells));
  keys.push_back(PATHENT_INT_KEY("free_below", "raw values below this are Free",
                                 c.sim.utility.planner.thresholds.free_below));
  keys.push_back(
      PATHENT_INT_KEY("occupied_above", "raw values above this are Occupied",
                      c.sim.utility.planner.thresholds.occupied_above));
  keys.push_back(PATHENT_REAL_KEY("sensor_range", "lidar maximum range, m",
                                  c.sim.sensor.max_range));
  keys.push_back(PATHENT_INT_KEY("beam_count", "lidar beams per scan",
                                 c.sim.sensor.beam_count));
  keys.push_back(PATHENT_REAL_KEY("hit_noise_std", "lidar range noise, m",
                                  c.sim.sensor.hit_noise_std));
  keys.push_back(PATHENT_REAL_KEY(
      "l_free", "log-odds update of a traversed cell", c.sim.log_odds.l_free));
  keys.push_back(PATHENT_REAL_KEY("l_occ", "log-odds update of a hit cell",
                                  c.sim.log_odds.l_occ));
  keys.push_back(
      PATHENT_REAL_KEY("l_min", "log-odds lower clamp", c.sim.log_odds.l_min));
  keys.push_back(
      PATHENT_REAL_KEY("l_max", "log-odds upper clamp", c.sim.log_odds.l_max));
  keys.push_back(PATHENT_INT_KEY(
      "min_cluster_size", "smallest frontier cluster", c.sim.min_cluster_size));
  keys.push_back(PATHENT_INT_KEY("goal_tolerance_cells",
                                 "arrival tolerance, cells",
                                 c.sim.goal_tolerance_cells));
  keys.push_back(PATHENT_REAL_KEY("fd_blacklist_radius",
                                  "radius blacklisted around an FD goal, cells",
                                  c.sim.fd_blacklist_radius));
  keys.push_back(
      PATHENT_REAL_KEY("unreachable_blacklist_radius",
                       "radius blacklisted around an unreachable goal, cells",
                       c.sim.unreachable_blacklist_radius));
  keys.push_back(
      PATHENT_INT_KEY("ssim_window", "SSIM window side, cells", c.ssim_window));
  keys.push_back(PATHENT_REAL_KEY("coverage_step",
                                  "distance step of the coverage series, m",
                                  c.coverage_step));
  keys.push_back({"snapshots", "write a belief PGM per tick (run only)",
                  [](ExperimentConfig& c, const std::string& v) {
                    c.snapshots = ParseBool(v);
                  },
                  [](const ExperimentConfig& c) {
                    return std::string(c.snapshots ? "true" : "false");
                  }});
  keys.push_back({"candidates", "write candidates.csv (run only)",
                  [](ExperimentConfig& c, const std::string& v) {
                    c.candidates = ParseBool(v);
                  },
                  [](const ExperimentConfig& c) {
                    return std::string(c.candidates ? "true" : "false");
                  }});
  keys.push_back(
      PATHENT_INT_KEY("jobs", "concurrent runs, 0 = hardware threads", c.jobs));
  keys.push_back(
      {"output", "output directory",
       [](ExperimentConfig& c, const std::string& v) { c.output = v; },
       [](const ExperimentConfig& c) { return c.output; }});
  return keys;
}

#undef PATHENT_INT_KEY
#undef PATHENT_REAL_KEY

}  // namespace

void ExperimentConfig::Validate() const {
  try {
    sim.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (methods.empty()) throw ConfigError("methods must not be empty");
  if (seeds.empty()) throw ConfigError("seeds must not be empty");
  if (ssim_window < 1) throw ConfigError("ssim_window must be >= 1");
  if (!(coverage_step > 0.0)) throw ConfigError("coverage_step must be > 0");
  if (jobs < 0) throw ConfigError("jobs must be >= 0");
  if (output.empty()) throw ConfigError("output must not be empty");
}

const std::vector<ConfigKey>& ConfigKeys() {
  static const std::vector<ConfigKey> keys = BuildKeys();
  return keys;
}

void SetConfigValue(const std::string& key, const std::string& value,
                    ExperimentConfig& config) {
  for (const ConfigKey& k : ConfigKeys()) {
    if (k.name != key) continue;
    try {
      k.set(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(key + ": " + e.what());
    }
    return;
  }
  throw ConfigError("unknown config key '" + key + "'");
}

void ApplyConfigText(std::istream& in, const std::string& source,
                     ExperimentConfig& config) {
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    if (!seen.insert(key).second) {
      throw ConfigError(where + ": repeated key '" + key + "'");
    }
    try {
      SetConfigValue(key, Trim(line.substr(eq + 1)), config);
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

void ApplyConfigFile(const std::string& path, ExperimentConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  ApplyConfigText(in, path, config);
}

void DumpConfig(std::ostream& out, const ExperimentConfig& config) {
  for (const ConfigKey& k : ConfigKeys()) {
    out << k.name << " = " << k.get(config) << "\n";
  }
}

std::vector<std::uint64_t> ParseSeedList(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const std::string& part : SplitList(text)) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      seeds.push_back(ParseInteger<std::uint64_t>(part));
      continue;
    }
    const auto lo = ParseInteger<std::uint64_t>(Trim(part.substr(0, dash)));
    const auto hi = ParseInteger<std::uint64_t>(Trim(part.substr(dash + 1)));
    if (hi < lo) throw ConfigError("empty seed range '" + part + "'");
    for (std::uint64_t s = lo;; ++s) {
      seeds.push_back(s);
      if (s == hi) break;
    }
  }
  if (seeds.empty()) throw ConfigError("empty seed list");
  return seeds;
}

}  // namespace pathent
