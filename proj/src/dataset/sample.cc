// src/dataset/sample.cc

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

#include "homevox/dataset/sample.h"

#include <filesystem>
#include <fstream>

#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

std::string speaker_name(SpeakerId id) {
  return id == SpeakerId::kCaregiver ? "caregiver" : "patient";
}

SpeakerId parse_speaker(const std::string &name) {
  if (name == "caregiver") return SpeakerId::kCaregiver;
  if (name == "patient") return SpeakerId::kPatient;
  throw Error("UnknownIdentity", "unknown speaker '" + name + "'");
}

std::string speaker_set_name(const SpeakerSet &set) {
  if (set.empty()) return "none";
  std::string out;
  for (SpeakerId id : set) {
    if (!out.empty()) out += '+';
    out += speaker_name(id);
  }
  return out;
}

SpeakerSet parse_speaker_set(const std::string &text) {
  SpeakerSet set;
  if (text == "none" || text.empty() || text == "-") return set;
  size_t start = 0;
  while (true) {
    size_t plus = text.find('+', start);
    std::string part = plus == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, plus - start);
    set.insert(parse_speaker(part));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return set;
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::kClean: return "clean";
    case Condition::kDeampNoise: return "deamp_noise";
    case Condition::kReverb: return "reverb";
    case Condition::kAllThree: return "all_three";
    case Condition::kField: return "field";
  }
  return "clean";
}

Condition parse_condition(const std::string &name) {
  if (name == "clean") return Condition::kClean;
  if (name == "deamp_noise") return Condition::kDeampNoise;
  if (name == "reverb") return Condition::kReverb;
  if (name == "all_three") return Condition::kAllThree;
  if (name == "field") return Condition::kField;
  throw Error("ParseError", "unknown condition '" + name + "'");
}

const std::vector<Condition> &protocol_conditions() {
  static const std::vector<Condition> kOrder = {
      Condition::kClean, Condition::kDeampNoise, Condition::kReverb,
      Condition::kAllThree};
  return kOrder;
}

std::vector<LabeledSample> load_label_manifest(const std::string &path) {
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<int> lines;
  auto records = read_records(path, &lines);
  std::vector<LabeledSample> samples;
  samples.reserve(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    const auto &r = records[i];
    if (r.size() != 7)
      throw Error("ParseError", path + ":" + std::to_string(lines[i]) +
                                    ": expected 7 fields, got " +
                                    std::to_string(r.size()));
    LabeledSample s;
    s.sample_id = r[0];
    std::filesystem::path p(r[1]);
    s.path = p.is_absolute() ? p.string() : (base / p).string();
    s.is_speech = parse_long(r[2], "is_speech") != 0;
    s.speakers = parse_speaker_set(r[3]);
    s.angry = r[4] == "angry";
    if (r[4] != "angry" && r[4] != "not_angry")
      throw Error("ParseError", path + ":" + std::to_string(lines[i]) +
                                    ": bad emotion '" + r[4] + "'");
    s.conflict = parse_long(r[5], "conflict") != 0;
    s.home_id = r[6];
    if (!s.speakers.empty() && !s.is_speech)
      throw Error("ParseError", path + ":" + std::to_string(lines[i]) +
                                    ": speakers set on non-speech sample");
    samples.push_back(std::move(s));
  }
  return samples;
}

void save_label_manifest(const std::vector<LabeledSample> &samples,
                         const std::string &path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("IoFailure", "cannot write " + path);
  out << "# homevox labels v1\n";
  for (const auto &s : samples) {
    out << join_fields({s.sample_id, s.path, s.is_speech ? "1" : "0",
                        speaker_set_name(s.speakers),
                        s.angry ? "angry" : "not_angry",
                        s.conflict ? "1" : "0", s.home_id})
        << "\n";
  }
}

}  // namespace homevox
