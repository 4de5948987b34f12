// src/realism/reverb.cc

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

#include "homevox/realism/reverb.h"

#include <cmath>

#include "homevox/dsp/kernels.h"
#include "homevox/util/error.h"

namespace homevox {

namespace {

int delay_samples(double ms, int rate) {
  int d = static_cast<int>(std::lround(ms * rate / 1000.0));
  return d < 1 ? 1 : d;
}

}  // namespace

AudioClip reverberate(const AudioClip &clip, const ReverbParams &p) {
  if (!p.valid())
    throw Error("BadReverbParams", "r,d in [0,1] and f in [0,1) required");
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.id = clip.id;
  if (p.r == 0.0) {
    out.samples = clip.samples;
    return out;
  }

  const size_t n = clip.samples.size();
  std::array<int, 4> delays;
  std::array<float, 4> gains;
  for (size_t k = 0; k < 4; ++k) {
    delays[k] = delay_samples(kCombDelaysMs[k], clip.sample_rate);
    gains[k] = static_cast<float>(
        std::pow(p.f, kCombDelaysMs[k] / kCombDelaysMs[0]));
  }

  std::vector<float> wet(n);
  kernels::comb_bank(clip.span(), std::span<const int>(delays),
                     std::span<const float>(gains), kCombBankScale, wet);
  const float d = static_cast<float>(p.d);
  for (double ap_ms : kAllpassDelaysMs)
    kernels::allpass_inplace(wet, delay_samples(ap_ms, clip.sample_rate), d);

  out.samples.resize(n);
  const float r = static_cast<float>(p.r);
  const float dry = 1.0f - r;
  for (size_t i = 0; i < n; ++i) {
    float v = dry * clip.samples[i] + r * wet[i];
    if (v > 1.0f) v = 1.0f;
    if (v < -1.0f) v = -1.0f;
    out.samples[i] = v;
  }
  return out;
}

}  // namespace homevox
