// homevox/dsp/kernels.h

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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace homevox::kernels {

// Sample-domain and frame-domain inner loops. Each kernel exists twice:
// the `serial` namespace holds the reference implementation, the outer
// namespace the production one (OpenMP when built with it). For any
// thread count the production output is bitwise identical to the
// reference; reductions use fixed-size chunk partials combined in chunk
// order so scheduling never changes the result. tools/bench_kernels
// compares the two.

constexpr size_t kReductionChunk = 16384;

struct FrameGrid {
  size_t frame_len = 0;
  size_t hop = 0;

  size_t count(size_t n) const {
    return n < frame_len ? 0 : 1 + (n - frame_len) / hop;
  }
};

namespace serial {

// out[i] = clamp(in[i] * gain, -1, 1)
void scale_clamp(std::span<const float> in, float gain, std::span<float> out);

// out[i] = clamp(a[i] + b[i], -1, 1)
void mix_clamp(std::span<const float> a, std::span<const float> b,
               std::span<float> out);

double sum_squares(std::span<const float> x);

// Parallel feedback-comb bank: out[n] = scale * sum_k y_k[n] with
// y_k[n] = x[n - delays[k]] + gains[k] * y_k[n - delays[k]]. Each comb
// is recursive and runs sequentially; the bank is parallel across combs.
void comb_bank(std::span<const float> in, std::span<const int> delays,
               std::span<const float> gains, float scale,
               std::span<float> out);

// In-place Schroeder all-pass: y[n] = -c x[n] + x[n-D] + c y[n-D].
// Recursive; no parallel variant exists (the production name forwards here).
void allpass_inplace(std::span<float> x, int delay, float coeff);

// Per-frame RMS.
void frame_rms(std::span<const float> x, FrameGrid grid, std::span<float> out);

// Per-frame zero-crossing rate, crossings / (frame_len - 1).
void frame_zcr(std::span<const float> x, FrameGrid grid, std::span<float> out);

// Per-frame cepstral coefficients c1..c_n via Hamming window, power
// spectrum, mel filterbank, log, DCT-II. Row-major [frame][coeff].
void cepstra_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                    int n_mels, int n_coeffs, std::span<float> out);

// Per-frame pitch estimate in Hz from the normalized autocorrelation
// peak inside [lag_min, lag_max]; 0 for frames below the voicing floor.
void pitch_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                  int lag_min, int lag_max, float voicing_floor,
                  std::span<float> out);

}  // namespace serial

void scale_clamp(std::span<const float> in, float gain, std::span<float> out);
void mix_clamp(std::span<const float> a, std::span<const float> b,
               std::span<float> out);
double sum_squares(std::span<const float> x);
void comb_bank(std::span<const float> in, std::span<const int> delays,
               std::span<const float> gains, float scale,
               std::span<float> out);
void allpass_inplace(std::span<float> x, int delay, float coeff);
void frame_rms(std::span<const float> x, FrameGrid grid, std::span<float> out);
void frame_zcr(std::span<const float> x, FrameGrid grid, std::span<float> out);
void cepstra_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                    int n_mels, int n_coeffs, std::span<float> out);
void pitch_frames(std::span<const float> x, FrameGrid grid, int sample_rate,
                  int lag_min, int lag_max, float voicing_floor,
                  std::span<float> out);

// True when the library was built with OpenMP.
bool parallel_enabled();

}  // namespace homevox::kernels
