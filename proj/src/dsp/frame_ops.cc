// src/dsp/frame_ops.cc

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

#include "frame_ops.h"

#include <algorithm>

namespace homevox::kernels::detail {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogFloor = 1e-10;

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

}  // namespace

void fft_inplace(std::span<std::complex<double>> a) {
  const size_t n = a.size();
  // Bit reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = -2.0 * kPi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

MelBank MelBank::build(int sample_rate, int nfft, int n_mels) {
  MelBank bank;
  bank.nfft = nfft;
  bank.n_mels = n_mels;
  const int n_bins = nfft / 2 + 1;
  const double mel_lo = hz_to_mel(0.0);
  const double mel_hi = hz_to_mel(sample_rate / 2.0);
  std::vector<double> centers_hz(n_mels + 2);
  for (int m = 0; m < n_mels + 2; ++m) {
    double mel = mel_lo + (mel_hi - mel_lo) * m / (n_mels + 1);
    centers_hz[m] = mel_to_hz(mel);
  }
  const double hz_per_bin = static_cast<double>(sample_rate) / nfft;
  bank.start_bin.resize(n_mels);
  bank.weights.resize(n_mels);
  for (int m = 0; m < n_mels; ++m) {
    double lo = centers_hz[m], mid = centers_hz[m + 1], hi = centers_hz[m + 2];
    int b0 = std::max(0, static_cast<int>(std::ceil(lo / hz_per_bin)));
    int b1 = std::min(n_bins - 1, static_cast<int>(std::floor(hi / hz_per_bin)));
    bank.start_bin[m] = b0;
    for (int b = b0; b <= b1; ++b) {
      double f = b * hz_per_bin;
      double w = f <= mid ? (f - lo) / (mid - lo) : (hi - f) / (hi - mid);
      bank.weights[m].push_back(std::max(0.0, w));
    }
  }
  return bank;
}

void cepstra_of(std::span<const float> frame, const MelBank &bank,
                int n_coeffs, std::span<float> out) {
  const size_t nfft = static_cast<size_t>(bank.nfft);
  std::vector<std::complex<double>> buf(nfft, {0.0, 0.0});
  const size_t n = frame.size();
  for (size_t i = 0; i < n; ++i) {
    double w = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (n - 1));
    buf[i] = std::complex<double>(frame[i] * w, 0.0);
  }
  fft_inplace(buf);

  const int n_bins = bank.nfft / 2 + 1;
  std::vector<double> power(n_bins);
  for (int b = 0; b < n_bins; ++b) power[b] = std::norm(buf[b]);

  std::vector<double> log_mel(bank.n_mels);
  for (int m = 0; m < bank.n_mels; ++m) {
    double acc = 0.0;
    const auto &w = bank.weights[m];
    for (size_t i = 0; i < w.size(); ++i)
      acc += w[i] * power[bank.start_bin[m] + i];
    log_mel[m] = std::log(acc + kLogFloor);
  }

  // DCT-II, keeping c1..c_n: a uniform log-energy shift (pure gain)
  // lands entirely in the dropped c0 term.
  const int M = bank.n_mels;
  for (int k = 1; k <= n_coeffs; ++k) {
    double acc = 0.0;
    for (int m = 0; m < M; ++m)
      acc += log_mel[m] * std::cos(kPi * k * (m + 0.5) / M);
    out[k - 1] = static_cast<float>(acc);
  }
}

float pitch_of(std::span<const float> frame, int sample_rate, int lag_min,
               int lag_max, float voicing_floor) {
  const int n = static_cast<int>(frame.size());
  if (lag_max >= n || lag_min < 1) return 0.0f;
  double r0 = 0.0;
  for (int i = 0; i < n; ++i) r0 += static_cast<double>(frame[i]) * frame[i];
  if (r0 <= 0.0) return 0.0f;
  double best = 0.0;
  int best_lag = 0;
  for (int lag = lag_min; lag <= lag_max; ++lag) {
    double acc = 0.0;
    for (int i = 0; i + lag < n; ++i)
      acc += static_cast<double>(frame[i]) * frame[i + lag];
    if (acc > best) {
      best = acc;
      best_lag = lag;
    }
  }
  if (best_lag == 0 || best / r0 < voicing_floor) return 0.0f;
  return static_cast<float>(sample_rate) / static_cast<float>(best_lag);
}

}  // namespace homevox::kernels::detail
