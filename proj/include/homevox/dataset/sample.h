// homevox/dataset/sample.h

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

#include <set>
#include <string>
#include <vector>

namespace homevox {

enum class SpeakerId { kCaregiver, kPatient };

std::string speaker_name(SpeakerId id);
SpeakerId parse_speaker(const std::string &name);

using SpeakerSet = std::set<SpeakerId>;

// "caregiver", "patient", "caregiver+patient", "none"
std::string speaker_set_name(const SpeakerSet &set);
SpeakerSet parse_speaker_set(const std::string &text);

enum class Condition { kClean, kDeampNoise, kReverb, kAllThree, kField };

std::string condition_name(Condition c);
Condition parse_condition(const std::string &name);

// The four synthesized protocol conditions, in manifest order.
const std::vector<Condition> &protocol_conditions();

// Ground truth for one window-length clip.
struct LabeledSample {
  std::string sample_id;
  std::string path;
  bool is_speech = false;
  SpeakerSet speakers;   // nonempty implies is_speech
  bool angry = false;
  bool conflict = false;
  Condition condition = Condition::kClean;
  std::string home_id;
};

// Label manifests are tab-separated records:
//   sample_id  path  is_speech  speakers  emotion  conflict  home_id
// Paths are resolved relative to the manifest's directory.
std::vector<LabeledSample> load_label_manifest(const std::string &path);
void save_label_manifest(const std::vector<LabeledSample> &samples,
                         const std::string &path);

}  // namespace homevox
