// homevox/realism/distortion.h

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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homevox/audio/clip.h"
#include "homevox/dataset/sample.h"
#include "homevox/realism/noise_catalog.h"
#include "homevox/realism/reverb.h"
#include "homevox/util/rng.h"

namespace homevox {

// Deamplification range: m strictly inside (0, 12) dB.
constexpr double kDeampMinDb = 0.0;
constexpr double kDeampMaxDb = 12.0;
constexpr double kDecayMax = 0.95;

struct NoiseRef {
  std::string entry_id;
  double offset_s = 0.0;
};

// One fully-determined realism treatment. Re-applying the same spec to
// the same clip always yields an identical output; every randomly drawn
// field is rounded to its 6-significant-digit manifest form at draw
// time, so a spec survives serialization unchanged.
struct DistortionSpec {
  std::optional<double> gain_db;  // deamplification stored as negative gain
  std::optional<NoiseRef> noise;
  std::optional<ReverbParams> reverb;
  uint64_t seed = 0;

  bool is_clean() const { return !gain_db && !noise && !reverb; }

  // Manifest columns: gain_db, noise_id, noise_offset_s, reverb_r,
  // reverb_d, reverb_f, spec_seed. Absent fields serialize as "-".
  std::vector<std::string> to_fields() const;
  static DistortionSpec from_fields(const std::vector<std::string> &fields);
};

// apply_gain_db(clip, -m) with m checked against (0, 12).
// Throws Error("OutOfRangeM").
AudioClip deamplify(const AudioClip &clip, double m_db);

// Per-sample sum with the noise segment starting at offset_s, hard
// clipped. Throws Error("RateMismatch") / Error("SegmentOutOfBounds").
AudioClip overlay_noise(const AudioClip &clip, const AudioClip &noise,
                        double offset_s);

// Draws the random fields a condition needs: m ~ U(0,12) open, noise
// entry and offset uniform over valid choices, r,d ~ U[0,1],
// f ~ U[0,0.95]. Draw order is fixed (m, noise, offset, r, d, f).
// Throws Error("EmptyCatalog") when a noise-bearing kind has no entries.
DistortionSpec sample_distortion(uint64_t rng_seed,
                                 const NoiseCatalog &catalog, Condition kind,
                                 double window_seconds = 5.0);

// deamplify -> overlay_noise -> reverberate, skipping absent stages.
AudioClip compose_distortion(const AudioClip &clip, const DistortionSpec &spec,
                             const NoiseCatalog &catalog);

}  // namespace homevox
