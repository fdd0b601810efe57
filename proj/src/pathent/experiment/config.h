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

#ifndef PATHENT_EXPERIMENT_CONFIG_H_
#define PATHENT_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pathent/grid_map/map_metrics.h"
#include "pathent/simulator/exploration.h"
#include "pathent/utility/utility.h"

namespace pathent {

// Thrown for malformed config text or values; the CLI maps it to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a run or a batch of runs depends on.
struct ExperimentConfig {
  // A map file (PGM or YAML), or a synthetic map: "room:W:H" or
  // "multiroom:SEED".
  std::string map;
  Method method = Method::kProposed;
  std::uint64_t seed = 1;
  std::vector<Method> methods = {Method::kFd, Method::kAgs, Method::kProposed};
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  SimConfig sim;
  int ssim_window = kDefaultSsimWindow;
  double coverage_step = 0.5;  // m, resampling step of coverage_series.csv
  bool snapshots = false;      // per-tick belief PGMs in run mode
  bool candidates = false;     // per-tick candidate scores in run mode
  int jobs = 0;                // concurrent runs; 0 = hardware threads
  std::string output = "out";

  // Throws ConfigError naming the first bad value.
  void Validate() const;
};

// One config key. `set` parses text into the config and throws ConfigError;
// `get` prints the current value so that set(get()) reproduces it exactly.
struct ConfigKey {
  std::string name;
  std::string help;
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

// All keys in dump order.
const std::vector<ConfigKey>& ConfigKeys();

// Flat text: one "key = value" per line, '#' starts a comment, blank lines
// are ignored, whitespace around key and value is trimmed. Unknown and
// repeated keys are errors. Values are applied on top of `config`.
void ApplyConfigText(std::istream& in, const std::string& source,
                     ExperimentConfig& config);
void ApplyConfigFile(const std::string& path, ExperimentConfig& config);
void SetConfigValue(const std::string& key, const std::string& value,
                    ExperimentConfig& config);

// Every key, in ConfigKeys() order, in the grammar above.
void DumpConfig(std::ostream& out, const ExperimentConfig& config);

// Parses "1,2,5-8" style lists.
std::vector<std::uint64_t> ParseSeedList(const std::string& text);

}  // namespace pathent

#endif  // PATHENT_EXPERIMENT_CONFIG_H_
