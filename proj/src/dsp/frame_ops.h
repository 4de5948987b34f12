// src/dsp/frame_ops.h

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

// Single-frame math shared by the serial and parallel kernel loops; both
// variants call exactly these functions so their outputs stay bitwise
// identical.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace homevox::kernels::detail {

inline float clamp1(float v) {
  if (v > 1.0f) return 1.0f;
  if (v < -1.0f) return -1.0f;
  return v;
}

inline float rms_of(std::span<const float> frame) {
  double acc = 0.0;
  for (float v : frame) acc += static_cast<double>(v) * v;
  return static_cast<float>(std::sqrt(acc / static_cast<double>(frame.size())));
}

inline float zcr_of(std::span<const float> frame) {
  if (frame.size() < 2) return 0.0f;
  size_t crossings = 0;
  for (size_t i = 1; i < frame.size(); ++i) {
    bool pos_prev = frame[i - 1] >= 0.0f;
    bool pos_now = frame[i] >= 0.0f;
    if (pos_prev != pos_now) ++crossings;
  }
  return static_cast<float>(crossings) /
         static_cast<float>(frame.size() - 1);
}

// Smallest power of two >= n.
inline size_t fft_size_for(size_t n) {
  size_t s = 1;
  while (s < n) s <<= 1;
  return s;
}

// Iterative radix-2 FFT, in place. size must be a power of two.
void fft_inplace(std::span<std::complex<double>> a);

// Precomputed mel filterbank for one (sample_rate, nfft, n_mels) shape.
struct MelBank {
  int nfft = 0;
  int n_mels = 0;
  // For each filter: first spectrum bin and per-bin weights.
  std::vector<int> start_bin;
  std::vector<std::vector<double>> weights;

  static MelBank build(int sample_rate, int nfft, int n_mels);
};

// c1..c_n for one frame: Hamming window, power spectrum, mel filterbank,
// log with floor, DCT-II (c0 dropped so pure gain shifts cancel out).
void cepstra_of(std::span<const float> frame, const MelBank &bank,
                int n_coeffs, std::span<float> out);

// Pitch of one frame via normalized autocorrelation peak in
// [lag_min, lag_max]; returns 0 when below the voicing floor.
float pitch_of(std::span<const float> frame, int sample_rate, int lag_min,
               int lag_max, float voicing_floor);

}  // namespace homevox::kernels::detail
