// src/audio/clip.cc

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

#include "homevox/audio/clip.h"

#include <cmath>

#include "homevox/dsp/kernels.h"
#include "homevox/util/error.h"

namespace homevox {

size_t WindowConfig::samples_at(int sample_rate) const {
  if (window_seconds <= 0 || sample_rate <= 0)
    throw Error("BadWindowConfig", "window_seconds and rate must be positive");
  double exact = window_seconds * sample_rate;
  double rounded = std::round(exact);
  if (std::abs(exact - rounded) > 1e-9 || rounded < 1)
    throw Error("BadWindowConfig",
                "window of " + std::to_string(window_seconds) + " s at " +
                    std::to_string(sample_rate) +
                    " Hz is not a whole sample count");
  return static_cast<size_t>(rounded);
}

std::vector<AudioClip> slice_windows(const AudioClip &clip,
                                     const WindowConfig &cfg) {
  const size_t win = cfg.samples_at(clip.sample_rate);
  std::vector<AudioClip> out;
  const size_t n_windows = clip.samples.size() / win;
  out.reserve(n_windows);
  for (size_t k = 0; k < n_windows; ++k) {
    AudioClip w;
    w.sample_rate = clip.sample_rate;
    w.id = clip.id + "#" + std::to_string(k);
    w.samples.assign(clip.samples.begin() + k * win,
                     clip.samples.begin() + (k + 1) * win);
    out.push_back(std::move(w));
  }
  return out;
}

double rms_dbfs(const AudioClip &clip) {
  if (clip.samples.empty()) throw Error("EmptyClip", "rms of empty clip");
  double ms = kernels::sum_squares(clip.span()) /
              static_cast<double>(clip.samples.size());
  if (ms <= 0.0) return kSilenceDbfs;
  return 10.0 * std::log10(ms);
}

AudioClip apply_gain_db(const AudioClip &clip, double gain_db) {
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.id = clip.id;
  out.samples.resize(clip.samples.size());
  const float gain = static_cast<float>(std::pow(10.0, gain_db / 20.0));
  kernels::scale_clamp(clip.span(), gain, out.samples);
  return out;
}

}  // namespace homevox
