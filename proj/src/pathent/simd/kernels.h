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

#ifndef PATHENT_SIMD_KERNELS_H_
#define PATHENT_SIMD_KERNELS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace pathent {
namespace simd {

// Data-parallel inner loops used by the whole-map metrics. Every kernel has a
// scalar reference implementation; vector variants must be bit-identical for
// element-wise kernels and agree to a relative 1e-12 for reductions (their
// summation order differs).

// Per-raw-value table indexed by (raw + 1), so UNKNOWN (-1) maps to slot 0 and
// occupancy percent 100 to slot 101.
using RawLut = std::array<double, 102>;

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  // Sum of lut[raw + 1] over all raw cell values.
  double (*lut_sum)(std::span<const std::int8_t> raw, const RawLut& lut);
  // out[i] = raw[i] / 100, UNKNOWN -> 0.5.
  void (*to_probability)(std::span<const std::int8_t> raw,
                         std::span<double> out);
  // Sum of (a[i] - b[i])^2.
  double (*squared_diff_sum)(std::span<const double> a,
                             std::span<const double> b);
  // out[i] = a[i] * b[i].
  void (*multiply)(std::span<const double> a, std::span<const double> b,
                   std::span<double> out);
  // acc[i] += x[i].
  void (*add_into)(std::span<double> acc, std::span<const double> x);
  // Local SSIM from window sums: sa, sb, saa, sbb, sab over n samples.
  void (*ssim_map)(std::span<const double> sa, std::span<const double> sb,
                   std::span<const double> saa, std::span<const double> sbb,
                   std::span<const double> sab, double inv_n, double c1,
                   double c2, std::span<double> out);
  double (*sum)(std::span<const double> x);
};

// Fastest ISA the running CPU supports among those compiled in.
Isa DetectIsa();

// The ISA used by Kernels(). Defaults to DetectIsa(); the environment variable
// PATHENT_SIMD=scalar forces the reference path.
Isa ActiveIsa();

bool IsaAvailable(Isa isa);
std::string_view IsaName(Isa isa);

// Throws std::invalid_argument if `isa` is not available on this machine.
const KernelTable& Kernels(Isa isa);
const KernelTable& Kernels();

namespace scalar {
const KernelTable& Table();
}  // namespace scalar

#if defined(PATHENT_HAVE_AVX2)
namespace avx2 {
const KernelTable& Table();
}  // namespace avx2
#endif

}  // namespace simd
}  // namespace pathent

#endif  // PATHENT_SIMD_KERNELS_H_
