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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "pathent/simd/kernels.h"

namespace pathent {
namespace simd {

bool IsaAvailable(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(PATHENT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa DetectIsa() {
  return IsaAvailable(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

Isa ActiveIsa() {
  static const Isa active = [] {
    const char* forced = std::getenv("PATHENT_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") {
      return Isa::kScalar;
    }
    return DetectIsa();
  }();
  return active;
}

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& Kernels(Isa isa) {
  if (!IsaAvailable(isa)) {
    throw std::invalid_argument("SIMD variant not available: " +
                                std::string(IsaName(isa)));
  }
#if defined(PATHENT_HAVE_AVX2)
  if (isa == Isa::kAvx2) return avx2::Table();
#endif
  return scalar::Table();
}

const KernelTable& Kernels() { return Kernels(ActiveIsa()); }

}  // namespace simd
}  // namespace pathent
