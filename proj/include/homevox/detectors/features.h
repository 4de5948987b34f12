// homevox/detectors/features.h

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

#include <string>
#include <vector>

#include "homevox/audio/clip.h"
#include "homevox/dsp/kernels.h"

namespace homevox {

// Frame grid, cepstral setup, pitch-proxy lags, and every detector
// threshold. Defaults are tuned on the synthetic fixtures under tests/,
// never on evaluation data. Loadable from a flat key-value file.
struct FeatureConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  int n_mels = 26;
  int n_cepstra = 13;  // c1..c13; c0 is dropped so pure gain cancels

  double pitch_min_hz = 50.0;
  double pitch_max_hz = 400.0;
  double voicing_floor = 0.30;  // autocorrelation peak / r0

  // energy_zcr_vad: a frame is active when its RMS clears
  // max(floor, gate_ratio * peak frame RMS); the window is speech when
  // the active fraction reaches speech_fraction and the mean active-
  // frame zero-crossing rate sits inside [zcr_min, zcr_max].
  double vad_energy_gate_ratio = 0.25;
  double vad_energy_floor = 1e-4;
  double vad_speech_fraction = 0.35;
  double vad_zcr_min = 0.005;
  double vad_zcr_max = 0.35;

  // cosine_sid: threshold on raw cosine similarity.
  double sid_threshold = 0.80;

  // prosody_emotion: loudness gate (dBFS) and pitch-variance gate (Hz^2).
  double emotion_loud_dbfs = -20.0;
  double emotion_pitch_var = 200.0;

  // conflict_heuristic: raised-voice frame gate (dBFS), the fraction of
  // raised frames required, and the normalized frame-energy variance
  // (variance / mean^2 of frame RMS) standing in for turn overlap.
  double conflict_frame_dbfs = -20.0;
  double conflict_raised_fraction = 0.5;
  double conflict_energy_var = 0.1;

  kernels::FrameGrid grid(int sample_rate) const;
  int lag_min(int sample_rate) const;  // from pitch_max_hz
  int lag_max(int sample_rate) const;  // from pitch_min_hz

  static FeatureConfig load(const std::string &path);
  void save(const std::string &path) const;
};

// Per-window frame statistics shared by the detectors.
struct WindowFeatures {
  std::vector<float> cepstra_mean;  // n_cepstra values, mean over frames
  std::vector<float> frame_rms;
  std::vector<float> frame_zcr;
  std::vector<float> frame_pitch;   // Hz, 0 where unvoiced
};

WindowFeatures extract_features(const AudioClip &clip,
                                const FeatureConfig &cfg);

// Mean of c1..c_n over frames; the enrollment/SID feature vector.
std::vector<float> cepstral_mean(const AudioClip &clip,
                                 const FeatureConfig &cfg);

}  // namespace homevox
