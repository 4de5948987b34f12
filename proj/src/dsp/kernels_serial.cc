// src/dsp/kernels_serial.cc

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

#include "homevox/dsp/kernels.h"

#include "frame_ops.h"

namespace homevox::kernels::serial {

using detail::clamp1;

void scale_clamp(std::span<const float> in, float gain, std::span<float> out) {
  assert(in.size() == out.size());
  for (size_t i = 0; i < in.size(); ++i) out[i] = clamp1(in[i] * gain);
}

void mix_clamp(std::span<const float> a, std::span<const float> b,
               std::span<float> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = clamp1(a[i] + b[i]);
}

double sum_squares(std::span<const float> x) {
  // Same fixed-chunk partials as the parallel version, combined in chunk
  // order, so both paths produce the identical double.
  const size_t n = x.size();
  const size_t n_chunks = (n + kReductionChunk - 1) / kReductionChunk;
  double total = 0.0;
  for (size_t c = 0; c < n_chunks; ++c) {
    size_t begin = c * kReductionChunk;
    size_t end = begin + kReductionChunk < n ? begin + kReductionChunk : n;
    double acc = 0.0;
    for (size_t i = begin; i < end; ++i)
      acc += static_cast<double>(x[i]) * x[i];
    total += acc;
  }
  return total;
}

namespace {

void run_comb(std::span<const float> in, int delay, float gain,
              std::span<float> y) {
  // Schroeder comb: the delay line sits in the forward path, so zero
  // feedback leaves a single delayed echo.
  const size_t n = in.size();
  const size_t d = static_cast<size_t>(delay);
  for (size_t i = 0; i < n; ++i) {
    y[i] = i >= d ? in[i - d] + gain * y[i - d] : 0.0f;
  }
}

void sum_combs(const std::vector<std::vector<float>> &ys, float scale,
               std::span<float> out) {
  const size_t n = out.size();
  for (size_t i = 0; i < n; ++i) {
    float acc = 0.0f;
    for (const auto &y : ys) acc += y[i];
    out[i] = scale * acc;
  }
}

}  // namespace

void comb_bank(std::span<const float> in, std::span<const int> delays,
               std::span<const float> gains, float scale,
               std::span<float> out) {
  assert(delays.size() == gains.size());
  std::vector<std::vector<float>> ys(delays.size(),
                                     std::vector<float>(in.size()));
  for (size_t k = 0; k < delays.size(); ++k)
    run_comb(in, delays[k], gains[k], ys[k]);
  sum_combs(ys, scale, out);
}

void allpass_inplace(std::span<float> x, int delay, float coeff) {
  const size_t n = x.size();
  const size_t d = static_cast<size_t>(delay);
  std::vector<float> in(x.begin(), x.end());
  for (size_t i = 0; i < n; ++i) {
    float xd = i >= d ? in[i - d] : 0.0f;
    float yd = i >= d ? x[i - d] : 0.0f;
    x[i] = -coeff * in[i] + xd + coeff * yd;
  }
}

void frame_rms(std::span<const float> x, FrameGrid grid,
               std::span<float> out) {
  const size_t n_frames = grid.count(x.size());
  assert(out.size() >= n_frames);
  for (size_t f = 0; f < n_frames; ++f)
    out[f] = detail::rms_of(x.subspan(f * grid.hop, grid.frame_len));
}

void frame_zcr(std::span<const float> x, FrameGrid grid,
               std::span<float> out) {
  const size_t n_frames = grid.count(x.size());
  assert(out.size() >= n_frames);
  for (size_t f = 0; f < n_frames; ++f)
    out[f] = detail::zcr_of(x.subspan(f * grid.hop, grid.frame_len));
}

void cepstra_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                    int n_mels, int n_coeffs, std::span<float> out) {
  const size_t n_frames = grid.count(x.size());
  assert(out.size() >= n_frames * static_cast<size_t>(n_coeffs));
  const auto bank = detail::MelBank::build(
      sample_rate, static_cast<int>(detail::fft_size_for(grid.frame_len)),
      n_mels);
  for (size_t f = 0; f < n_frames; ++f)
    detail::cepstra_of(x.subspan(f * grid.hop, grid.frame_len), bank, n_coeffs,
                       out.subspan(f * n_coeffs, n_coeffs));
}

void pitch_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                  int lag_min, int lag_max, float voicing_floor,
                  std::span<float> out) {
  const size_t n_frames = grid.count(x.size());
  assert(out.size() >= n_frames);
  for (size_t f = 0; f < n_frames; ++f)
    out[f] = detail::pitch_of(x.subspan(f * grid.hop, grid.frame_len),
                              sample_rate, lag_min, lag_max, voicing_floor);
}

}  // namespace homevox::kernels::serial
