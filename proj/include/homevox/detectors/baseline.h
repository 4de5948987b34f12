// homevox/detectors/baseline.h

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
#include <string>
#include <vector>

#include "homevox/detectors/features.h"
#include "homevox/pipeline/verdicts.h"

namespace homevox {

// Desk-scale reference detectors for the four pipeline roles. All are
// pure functions of (clip, config); profiles are immutable after
// enrollment.

struct SpeakerProfile {
  SpeakerId identity = SpeakerId::kCaregiver;
  std::vector<float> centroid;
  int enrollment_count = 0;
};

// Speech when enough frames clear the adaptive energy gate and the mean
// active-frame zero-crossing rate stays inside the speech band.
// The score is the active-frame fraction.
VadVerdict energy_zcr_vad(const AudioClip &clip, const FeatureConfig &cfg);

// Centroid = arithmetic mean of per-window cepstral-mean vectors.
// Throws Error("EmptyEnrollment").
SpeakerProfile enroll(const std::vector<AudioClip> &windows, SpeakerId identity,
                      const FeatureConfig &cfg);

double cosine_similarity(std::span<const float> a, std::span<const float> b);

// speakers = identities whose centroid cosine similarity reaches tau.
// Verdict scores are (similarity+1)/2 so they live in [0, 1].
SidVerdict cosine_sid(const AudioClip &clip,
                      const std::vector<SpeakerProfile> &profiles, double tau,
                      const FeatureConfig &cfg);

// Angry when the window is loud and the pitch proxy varies; both gates
// are monotone in level, so deamplifying a not-angry window can never
// flip it to angry.
EmotionVerdict prosody_emotion(const AudioClip &clip, const FeatureConfig &cfg);

// Conflict when enough frames are raised AND frame energy varies
// (normalized variance, the turn-overlap proxy).
ConflictVerdict conflict_heuristic(const AudioClip &clip,
                                   const FeatureConfig &cfg);

// Negative control: features are a fixed random projection of the raw
// head of the window, which carries phase rather than speaker identity.
// Mirrors the role of a known-bad model in the protocol.
struct DegradedSidConfig {
  uint64_t seed = 17;
  int dim = 13;
  size_t input_len = 2048;
};

std::vector<float> degraded_features(const AudioClip &clip,
                                     const DegradedSidConfig &cfg);
SpeakerProfile enroll_degraded(const std::vector<AudioClip> &windows,
                               SpeakerId identity,
                               const DegradedSidConfig &cfg);
SidVerdict degraded_sid(const AudioClip &clip,
                        const std::vector<SpeakerProfile> &profiles, double tau,
                        const DegradedSidConfig &cfg);

// Profile files: a "# features: <kind> seed=<n>" header line, then
// tab-separated records: identity, enrollment_count, space-joined
// centroid values.
struct ProfileFile {
  std::string kind = "cepstral";  // or "randproj"
  uint64_t seed = 0;              // randproj only
  std::vector<SpeakerProfile> profiles;
};

void save_profiles(const ProfileFile &file, const std::string &path);
ProfileFile load_profiles(const std::string &path);

}  // namespace homevox
