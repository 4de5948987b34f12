// src/dsp/kernels_parallel.cc

// Copyright 2026  Homevox Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cassert>
#include <cstdint>

#include "homevox/dsp/kernels.h"

#include "frame_ops.h"

namespace homevox::kernels {

using detail::clamp1;

// Below this many elements the OpenMP fork costs more than the loop.
static constexpr size_t kParMinN = 8192;

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

void scale_clamp(std::span<const float> in, float gain, std::span<float> out) {
  assert(in.size() == out.size());
  const int64_t n = static_cast<int64_t>(in.size());
#pragma omp parallel for schedule(static) if (n >= (int64_t)kParMinN)
  for (int64_t i = 0; i < n; ++i) out[i] = clamp1(in[i] * gain);
}

void mix_clamp(std::span<const float> a, std::span<const float> b,
               std::span<float> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const int64_t n = static_cast<int64_t>(a.size());
#pragma omp parallel for schedule(static) if (n >= (int64_t)kParMinN)
  for (int64_t i = 0; i < n; ++i) out[i] = clamp1(a[i] + b[i]);
}

double sum_squares(std::span<const float> x) {
  const size_t n = x.size();
  const int64_t n_chunks =
      static_cast<int64_t>((n + kReductionChunk - 1) / kReductionChunk);
  std::vector<double> partial(n_chunks, 0.0);
#pragma omp parallel for schedule(static) if (n_chunks > 1)
  for (int64_t c = 0; c < n_chunks; ++c) {
    size_t begin = static_cast<size_t>(c) * kReductionChunk;
    size_t end = begin + kReductionChunk < n ? begin + kReductionChunk : n;
    double acc = 0.0;
    for (size_t i = begin; i < end; ++i)
      acc += static_cast<double>(x[i]) * x[i];
    partial[c] = acc;
  }
  double total = 0.0;
  for (int64_t c = 0; c < n_chunks; ++c) total += partial[c];
  return total;
}

void comb_bank(std::span<const float> in, std::span<const int> delays,
               std::span<const float> gains, float scale,
               std::span<float> out) {
  assert(delays.size() == gains.size());
  const int64_t n_combs = static_cast<int64_t>(delays.size());
  std::vector<std::vector<float>> ys(n_combs, std::vector<float>(in.size()));
  // Combs are recursive, so parallelism runs across filters, not samples.
#pragma omp parallel for schedule(static) if (n_combs > 1)
  for (int64_t k = 0; k < n_combs; ++k) {
    const size_t d = static_cast<size_t>(delays[k]);
    const float g = gains[k];
    auto &y = ys[k];
    for (size_t i = 0; i < in.size(); ++i) {
      y[i] = i >= d ? in[i - d] + g * y[i - d] : 0.0f;
    }
  }
  const int64_t n = static_cast<int64_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= (int64_t)kParMinN)
  for (int64_t i = 0; i < n; ++i) {
    float acc = 0.0f;
    for (const auto &y : ys) acc += y[i];
    out[i] = scale * acc;
  }
}

void allpass_inplace(std::span<float> x, int delay, float coeff) {
  serial::allpass_inplace(x, delay, coeff);
}

void frame_rms(std::span<const float> x, FrameGrid grid,
               std::span<float> out) {
  const int64_t n_frames = static_cast<int64_t>(grid.count(x.size()));
  assert(out.size() >= static_cast<size_t>(n_frames));
#pragma omp parallel for schedule(static) if (n_frames > 8)
  for (int64_t f = 0; f < n_frames; ++f)
    out[f] = detail::rms_of(x.subspan(f * grid.hop, grid.frame_len));
}

void frame_zcr(std::span<const float> x, FrameGrid grid,
               std::span<float> out) {
  const int64_t n_frames = static_cast<int64_t>(grid.count(x.size()));
  assert(out.size() >= static_cast<size_t>(n_frames));
#pragma omp parallel for schedule(static) if (n_frames > 8)
  for (int64_t f = 0; f < n_frames; ++f)
    out[f] = detail::zcr_of(x.subspan(f * grid.hop, grid.frame_len));
}

void cepstra_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                    int n_mels, int n_coeffs, std::span<float> out) {
  const int64_t n_frames = static_cast<int64_t>(grid.count(x.size()));
  assert(out.size() >= static_cast<size_t>(n_frames) * n_coeffs);
  const auto bank = detail::MelBank::build(
      sample_rate, static_cast<int>(detail::fft_size_for(grid.frame_len)),
      n_mels);
#pragma omp parallel for schedule(static) if (n_frames > 4)
  for (int64_t f = 0; f < n_frames; ++f)
    detail::cepstra_of(x.subspan(f * grid.hop, grid.frame_len), bank, n_coeffs,
                       out.subspan(f * n_coeffs, n_coeffs));
}

void pitch_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                  int lag_min, int lag_max, float voicing_floor,
                  std::span<float> out) {
  const int64_t n_frames = static_cast<int64_t>(grid.count(x.size()));
  assert(out.size() >= static_cast<size_t>(n_frames));
#pragma omp parallel for schedule(static) if (n_frames > 4)
  for (int64_t f = 0; f < n_frames; ++f)
    out[f] = detail::pitch_of(x.subspan(f * grid.hop, grid.frame_len),
                              sample_rate, lag_min, lag_max, voicing_floor);
}

}  // namespace homevox::kernels
