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

// Compiled with -mavx2. Nothing in here may run before dispatch has checked
// that the CPU supports AVX2.

#include <immintrin.h>

#include <cstddef>
#include <cstring>

#include "pathent/simd/kernels.h"

namespace pathent {
namespace simd {
namespace avx2 {
namespace {

double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

// Eight int8 values widened to int32 lanes.
__m256i LoadEightRaw(const std::int8_t* p) {
  std::int64_t bits;
  std::memcpy(&bits, p, sizeof(bits));
  return _mm256_cvtepi8_epi32(_mm_cvtsi64_si128(bits));
}

double LutSum(std::span<const std::int8_t> raw, const RawLut& lut) {
  const std::size_t n = raw.size();
  const __m256i one = _mm256_set1_epi32(1);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i index = _mm256_add_epi32(LoadEightRaw(raw.data() + i), one);
    acc0 = _mm256_add_pd(
        acc0, _mm256_i32gather_pd(lut.data(),
                                  _mm256_castsi256_si128(index), 8));
    acc1 = _mm256_add_pd(
        acc1, _mm256_i32gather_pd(lut.data(),
                                  _mm256_extracti128_si256(index, 1), 8));
  }
  double total = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += lut[static_cast<std::size_t>(raw[i] + 1)];
  return total;
}

void ToProbability(std::span<const std::int8_t> raw, std::span<double> out) {
  const std::size_t n = raw.size();
  const __m256d hundred = _mm256_set1_pd(100.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i wide = LoadEightRaw(raw.data() + i);
    // Lanes where raw < 0 are UNKNOWN.
    const __m256i unknown = _mm256_cmpgt_epi32(zero, wide);
    for (int half_index = 0; half_index < 2; ++half_index) {
      const __m128i lanes = half_index == 0
                                ? _mm256_castsi256_si128(wide)
                                : _mm256_extracti128_si256(wide, 1);
      const __m128i lane_mask = half_index == 0
                                    ? _mm256_castsi256_si128(unknown)
                                    : _mm256_extracti128_si256(unknown, 1);
      const __m256d value =
          _mm256_div_pd(_mm256_cvtepi32_pd(lanes), hundred);
      const __m256d mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(lane_mask));
      _mm256_storeu_pd(out.data() + i + 4 * half_index,
                       _mm256_blendv_pd(value, half, mask));
    }
  }
  for (; i < n; ++i) {
    out[i] = raw[i] < 0 ? 0.5 : static_cast<double>(raw[i]) / 100.0;
  }
}

double SquaredDiffSum(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i),
                                     _mm256_loadu_pd(b.data() + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i + 4),
                                     _mm256_loadu_pd(b.data() + i + 4));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
  }
  double total = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

void Multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                   _mm256_loadu_pd(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void AddInto(std::span<double> acc, std::span<const double> x) {
  const std::size_t n = acc.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc.data() + i,
                     _mm256_add_pd(_mm256_loadu_pd(acc.data() + i),
                                   _mm256_loadu_pd(x.data() + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void SsimMap(std::span<const double> sa, std::span<const double> sb,
             std::span<const double> saa, std::span<const double> sbb,
             std::span<const double> sab, double inv_n, double c1, double c2,
             std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d vinv = _mm256_set1_pd(inv_n);
  const __m256d vc1 = _mm256_set1_pd(c1);
  const __m256d vc2 = _mm256_set1_pd(c2);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mu_a = _mm256_mul_pd(_mm256_loadu_pd(sa.data() + i), vinv);
    const __m256d mu_b = _mm256_mul_pd(_mm256_loadu_pd(sb.data() + i), vinv);
    const __m256d mu_ab = _mm256_mul_pd(mu_a, mu_b);
    const __m256d mu_aa = _mm256_mul_pd(mu_a, mu_a);
    const __m256d mu_bb = _mm256_mul_pd(mu_b, mu_b);
    const __m256d var_a = _mm256_sub_pd(
        _mm256_mul_pd(_mm256_loadu_pd(saa.data() + i), vinv), mu_aa);
    const __m256d var_b = _mm256_sub_pd(
        _mm256_mul_pd(_mm256_loadu_pd(sbb.data() + i), vinv), mu_bb);
    const __m256d cov = _mm256_sub_pd(
        _mm256_mul_pd(_mm256_loadu_pd(sab.data() + i), vinv), mu_ab);
    const __m256d numerator =
        _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(two, mu_ab), vc1),
                      _mm256_add_pd(_mm256_mul_pd(two, cov), vc2));
    const __m256d denominator =
        _mm256_mul_pd(_mm256_add_pd(_mm256_add_pd(mu_aa, mu_bb), vc1),
                      _mm256_add_pd(_mm256_add_pd(var_a, var_b), vc2));
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(numerator, denominator));
  }
  for (; i < n; ++i) {
    const double mu_a = sa[i] * inv_n;
    const double mu_b = sb[i] * inv_n;
    const double mu_ab = mu_a * mu_b;
    const double mu_aa = mu_a * mu_a;
    const double mu_bb = mu_b * mu_b;
    const double var_a = saa[i] * inv_n - mu_aa;
    const double var_b = sbb[i] * inv_n - mu_bb;
    const double cov = sab[i] * inv_n - mu_ab;
    out[i] = ((2.0 * mu_ab + c1) * (2.0 * cov + c2)) /
             ((mu_aa + mu_bb + c1) * (var_a + var_b + c2));
  }
}

double Sum(std::span<const double> x) {
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x.data() + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x.data() + i + 4));
  }
  double total = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += x[i];
  return total;
}

}  // namespace

const KernelTable& Table() {
  static const KernelTable table{&LutSum,   &ToProbability, &SquaredDiffSum,
                                 &Multiply, &AddInto,       &SsimMap,
                                 &Sum};
  return table;
}

}  // namespace avx2
}  // namespace simd
}  // namespace pathent
