// homevox/synth/signals.h

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

#include "homevox/audio/clip.h"

namespace homevox::synth {

AudioClip silence(double seconds, int rate = 16000);

AudioClip tone(double freq_hz, double amplitude, double seconds,
               int rate = 16000);

// Uniform white noise in [-amplitude, amplitude].
AudioClip white_noise(double amplitude, double seconds, uint64_t seed,
                      int rate = 16000);

// Speech-like test signal: a harmonic complex at f0 with a rolled-off
// spectrum, amplitude-modulated at a syllabic rate. Persona separation
// in tests comes from distinct f0 and formant emphasis.
struct VoiceParams {
  double f0_hz = 150.0;
  int n_harmonics = 12;
  double formant_hz = 800.0;   // harmonics near this frequency are boosted
  double formant_width_hz = 300.0;
  double am_rate_hz = 4.0;     // syllabic envelope
  double am_depth = 0.6;       // 0 = flat, 1 = full
  double amplitude = 0.3;      // peak of the unmodulated complex
  double vibrato_hz = 0.0;     // slow f0 wobble, gives pitch variance
  double vibrato_depth = 0.0;  // fraction of f0
  double phase = 0.0;          // initial carrier phase, radians
  double am_phase = 0.0;       // initial envelope phase, radians
};

AudioClip voice_like(const VoiceParams &params, double seconds,
                     int rate = 16000);

// Linear frequency sweep from f0 to f1.
AudioClip chirp(double f0_hz, double f1_hz, double amplitude, double seconds,
                int rate = 16000);

}  // namespace homevox::synth
