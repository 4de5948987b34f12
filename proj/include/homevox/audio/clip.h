// homevox/audio/clip.h

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

#include <span>
#include <string>
#include <vector>

namespace homevox {

// Mono PCM clip, samples in [-1, 1]. The unit that flows through every
// stage of the pipeline. Immutable by convention: operations return new
// clips, so sharing across threads is safe.
struct AudioClip {
  std::vector<float> samples;
  int sample_rate = 16000;
  std::string id;

  size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
  std::span<const float> span() const { return samples; }
};

// Fixed-length windowing. The trailing remainder shorter than a window
// is dropped, never padded.
struct WindowConfig {
  double window_seconds = 5.0;

  // Window length in samples for a given rate. Throws
  // Error("BadWindowConfig") when window_seconds * rate is not integral.
  size_t samples_at(int sample_rate) const;
};

// Contiguous, non-overlapping, in-order windows; ids are "<id>#<k>".
std::vector<AudioClip> slice_windows(const AudioClip &clip,
                                     const WindowConfig &cfg);

// The rms_dbfs value reported for all-zero clips.
constexpr double kSilenceDbfs = -300.0;

// 20*log10(rms). Throws Error("EmptyClip") on empty input.
double rms_dbfs(const AudioClip &clip);

// Every sample multiplied by 10^(gain_db/20), hard-clipped to [-1, 1].
AudioClip apply_gain_db(const AudioClip &clip, double gain_db);

}  // namespace homevox
