// homevox/realism/reverb.h

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

#include <array>

#include "homevox/audio/clip.h"

namespace homevox {

// Room reverberation as a Schroeder network: four parallel feedback
// combs followed by two series all-pass filters.
//
//   r  wet/dry mix in [0, 1]; r = 0 is the bit-exact identity
//   d  diffusion in [0, 1]; the all-pass coefficient
//   f  decay in [0, 1); comb k's feedback gain is f^(delay_k / delay_0),
//      so every comb decays at the same rate per second
struct ReverbParams {
  double r = 0.0;
  double d = 0.0;
  double f = 0.0;

  bool valid() const {
    return r >= 0.0 && r <= 1.0 && d >= 0.0 && d <= 1.0 && f >= 0.0 && f < 1.0;
  }
};

// The fixed delay table, milliseconds. Comb delays first, then the two
// all-pass delays. Converted to samples at the clip's rate (rounded,
// minimum one sample).
constexpr std::array<double, 4> kCombDelaysMs = {29.7, 37.1, 41.1, 43.7};
constexpr std::array<double, 2> kAllpassDelaysMs = {5.0, 1.7};

// The comb-bank sum is scaled by this before the all-passes so four
// overlapping echoes keep headroom.
constexpr float kCombBankScale = 0.25f;

// (1-r)*dry + r*wet, truncated to the input length, hard-clipped.
// Throws Error("BadReverbParams") when p is out of range.
AudioClip reverberate(const AudioClip &clip, const ReverbParams &p);

}  // namespace homevox
