// src/synth/signals.cc

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

#include "homevox/synth/signals.h"

#include <cmath>

#include "homevox/util/rng.h"

namespace homevox::synth {

namespace {
constexpr double kPi = 3.14159265358979323846;

size_t sample_count(double seconds, int rate) {
  return static_cast<size_t>(std::llround(seconds * rate));
}
}  // namespace

AudioClip silence(double seconds, int rate) {
  AudioClip clip;
  clip.sample_rate = rate;
  clip.samples.assign(sample_count(seconds, rate), 0.0f);
  return clip;
}

AudioClip tone(double freq_hz, double amplitude, double seconds, int rate) {
  AudioClip clip;
  clip.sample_rate = rate;
  const size_t n = sample_count(seconds, rate);
  clip.samples.resize(n);
  for (size_t i = 0; i < n; ++i)
    clip.samples[i] = static_cast<float>(
        amplitude * std::sin(2.0 * kPi * freq_hz * i / rate));
  return clip;
}

AudioClip white_noise(double amplitude, double seconds, uint64_t seed,
                      int rate) {
  AudioClip clip;
  clip.sample_rate = rate;
  const size_t n = sample_count(seconds, rate);
  clip.samples.resize(n);
  Rng rng(seed);
  for (size_t i = 0; i < n; ++i)
    clip.samples[i] =
        static_cast<float>(amplitude * (2.0 * rng.uniform() - 1.0));
  return clip;
}

AudioClip voice_like(const VoiceParams &p, double seconds, int rate) {
  AudioClip clip;
  clip.sample_rate = rate;
  const size_t n = sample_count(seconds, rate);
  clip.samples.resize(n);

  // Harmonic weights: 1/k rolloff with a raised-cosine bump around the
  // formant frequency.
  std::vector<double> weights(p.n_harmonics);
  double weight_sum = 0.0;
  for (int k = 1; k <= p.n_harmonics; ++k) {
    double freq = k * p.f0_hz;
    double w = 1.0 / k;
    double df = (freq - p.formant_hz) / p.formant_width_hz;
    if (std::abs(df) < 1.0) w *= 1.0 + 2.0 * 0.5 * (1.0 + std::cos(kPi * df));
    weights[k - 1] = w;
    weight_sum += w;
  }

  double phase0 = 0.0;  // running f0 phase so vibrato stays continuous
  for (size_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / rate;
    double f0 = p.f0_hz;
    if (p.vibrato_hz > 0.0)
      f0 *= 1.0 + p.vibrato_depth * std::sin(2.0 * kPi * p.vibrato_hz * t);
    phase0 += 2.0 * kPi * f0 / rate;
    double v = 0.0;
    for (int k = 1; k <= p.n_harmonics; ++k)
      v += weights[k - 1] * std::sin(k * phase0);
    v *= p.amplitude / weight_sum;
    double env =
        1.0 - p.am_depth * 0.5 * (1.0 + std::cos(2.0 * kPi * p.am_rate_hz * t));
    clip.samples[i] = static_cast<float>(v * env);
  }
  return clip;
}

}  // namespace homevox::synth
