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

#include <cstddef>

#include "pathent/simd/kernels.h"

namespace pathent {
namespace simd {
namespace scalar {
namespace {

double LutSum(std::span<const std::int8_t> raw, const RawLut& lut) {
  double total = 0.0;
  for (const std::int8_t value : raw) {
    total += lut[static_cast<std::size_t>(value + 1)];
  }
  return total;
}

void ToProbability(std::span<const std::int8_t> raw, std::span<double> out) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = raw[i] < 0 ? 0.5 : static_cast<double>(raw[i]) / 100.0;
  }
}

double SquaredDiffSum(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

void Multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void AddInto(std::span<double> acc, std::span<const double> x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

void SsimMap(std::span<const double> sa, std::span<const double> sb,
             std::span<const double> saa, std::span<const double> sbb,
             std::span<const double> sab, double inv_n, double c1, double c2,
             std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double mu_a = sa[i] * inv_n;
    const double mu_b = sb[i] * inv_n;
    const double mu_ab = mu_a * mu_b;
    const double mu_aa = mu_a * mu_a;
    const double mu_bb = mu_b * mu_b;
    const double var_a = saa[i] * inv_n - mu_aa;
    const double var_b = sbb[i] * inv_n - mu_bb;
    const double cov = sab[i] * inv_n - mu_ab;
    const double numerator = (2.0 * mu_ab + c1) * (2.0 * cov + c2);
    const double denominator = (mu_aa + mu_bb + c1) * (var_a + var_b + c2);
    out[i] = numerator / denominator;
  }
}

double Sum(std::span<const double> x) {
  double total = 0.0;
  for (const double v : x) total += v;
  return total;
}

}  // namespace

const KernelTable& Table() {
  static const KernelTable table{&LutSum,   &ToProbability, &SquaredDiffSum,
                                 &Multiply, &AddInto,       &SsimMap,
                                 &Sum};
  return table;
}

}  // namespace scalar
}  // namespace simd
}  // namespace pathent
