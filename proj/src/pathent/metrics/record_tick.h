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


#ifndef PATHENT_METRICS_RECORD_TICK_H_
#define PATHENT_METRICS_RECORD_TICK_H_

#include <optional>

#include "pathent/metrics/trace.h"
#include "pathent/simulator/sim_state.h"

namespace pathent {

// Metrics of the current belief and pose graph.
TickRecord MakeTickRecord(const SimState& state,
                          std::optional<Cell> selected);

// Appends MakeTickRecord(state, selected) to `trace`.
void RecordTick(Trace& trace, const SimState& state,
                std::optional<Cell> selected);

}  // namespace pathent

#endif  // PATHENT_METRICS_RECORD_TICK_H_
