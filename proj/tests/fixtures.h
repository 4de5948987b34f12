// tests/fixtures.h

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

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "homevox/audio/clip.h"
#include "homevox/audio/wav_io.h"
#include "homevox/dataset/sample.h"
#include "homevox/realism/noise_catalog.h"
#include "homevox/synth/signals.h"
#include "homevox/util/record.h"
#include "homevox/util/rng.h"

namespace homevox::testing {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("homevox-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string str() const { return path_.string(); }
  std::filesystem::path path() const { return path_; }
  std::string file(const std::string &name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline AudioClip random_clip(uint64_t seed, double seconds = 1.0,
                             double amplitude = 0.25, int rate = 16000) {
  return synth::white_noise(amplitude, seconds, seed, rate);
}

// The two synthetic personas used for SID fixtures. Separation comes
// from fundamental and formant placement.
inline synth::VoiceParams caregiver_voice() {
  synth::VoiceParams p;
  p.f0_hz = 210.0;
  p.formant_hz = 1900.0;
  p.formant_width_hz = 350.0;
  p.amplitude = 0.35;
  return p;
}

inline synth::VoiceParams patient_voice() {
  synth::VoiceParams p;
  p.f0_hz = 120.0;
  p.formant_hz = 650.0;
  p.formant_width_hz = 250.0;
  p.amplitude = 0.35;
  return p;
}

// Writes a small household-noise catalog (quiet noise bursts) and its
// index file; returns the index path.
inline std::string write_noise_catalog(const TempDir &dir, int n_entries = 3,
                                       double duration_s = 12.0,
                                       double amplitude = 0.05,
                                       uint64_t seed = 9000) {
  const char *tags[] = {"dishes", "people walking", "water tap running",
                        "cutlery", "object impact"};
  std::vector<std::string> lines;
  for (int i = 0; i < n_entries; ++i) {
    AudioClip noise = synth::white_noise(amplitude, duration_s, seed + i);
    std::string name = "noise" + std::to_string(i) + ".wav";
    save_wav(noise, dir.file(name));
    lines.push_back(join_fields({"noise" + std::to_string(i), tags[i % 5],
                                 name, format_g6(duration_s)}));
  }
  std::string index = dir.file("noise_index.tsv");
  std::ofstream out(index);
  for (const auto &l : lines) out << l << "\n";
  return index;
}

// 60 labeled clean windows: speech-like positives and silence/noise
// negatives, written as WAVs plus a label manifest. Returns the
// manifest path.
inline std::string write_clean_windows(const TempDir &dir, int n = 60,
                                       uint64_t seed = 4100,
                                       const std::string &home_id = "home1") {
  std::vector<LabeledSample> samples;
  for (int i = 0; i < n; ++i) {
    AudioClip clip;
    LabeledSample s;
    s.sample_id = "clean" + std::to_string(i);
    s.home_id = home_id;
    // Two thirds speech, one third non-speech, deterministically laid out.
    if (i % 3 != 2) {
      synth::VoiceParams p = (i % 2 == 0) ? caregiver_voice() : patient_voice();
      p.amplitude = 0.35;
      clip = synth::voice_like(p, 5.0);
      s.is_speech = true;
      s.speakers = {i % 2 == 0 ? SpeakerId::kCaregiver : SpeakerId::kPatient};
    } else if (i % 6 == 2) {
      clip = synth::silence(5.0);
    } else {
      clip = synth::white_noise(0.15, 5.0, seed + i);
    }
    std::string name = s.sample_id + ".wav";
    save_wav(clip, dir.file(name));
    s.path = name;
    samples.push_back(std::move(s));
  }
  std::string manifest = dir.file("labels.tsv");
  save_label_manifest(samples, manifest);
  return manifest;
}

}  // namespace homevox::testing
