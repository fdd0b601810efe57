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


#include "pathent/metrics/record_tick.h"

#include <limits>

namespace pathent {

TickRecord MakeTickRecord(const SimState& state,
                          std::optional<Cell> selected) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  TickRecord r;
  r.tick = state.tick;
  r.distance = state.distance;
  r.coverage =
      CoveragePercent(state.belief, state.truth, state.coverage_mask);
  r.map_entropy = MapEntropy(state.belief);
  r.node_count = state.graph.node_count();
  r.edge_count = state.graph.edge_count();
  r.selected = selected;

  const WeightedGraph g = state.graph.ToWeighted();
  r.average_degree = g.node_count >= 1 ? AverageDegree(g) : kNaN;
  if (g.node_count >= 2) {
    r.algebraic_connectivity = AlgebraicConnectivity(g);
    r.normalized_tree_connectivity =
        IsConnected(g) ? NormalizedTreeConnectivity(g) : kNaN;
  } else {
    r.algebraic_connectivity = kNaN;
    r.normalized_tree_connectivity = kNaN;
  }
  r.graph_uncertainty =
      state.graph.edge_count() > 0 ? GraphUncertainty(state.graph) : kNaN;
  return r;
}

void RecordTick(Trace& trace, const SimState& state,
                std::optional<Cell> selected) {
  trace.push_back(MakeTickRecord(state, selected));
}

}  // namespace pathent
