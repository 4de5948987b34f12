// src/pipeline/pipeline.cc

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

#include "homevox/pipeline/pipeline.h"

#include <cstdint>

#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::kDiscardedVad: return "discarded_vad";
    case Stage::kDiscardedSid: return "discarded_sid";
    case Stage::kScored: return "scored";
    case Stage::kFailed: return "failed";
  }
  return "failed";
}

namespace {

Stage parse_stage(const std::string &name) {
  if (name == "discarded_vad") return Stage::kDiscardedVad;
  if (name == "discarded_sid") return Stage::kDiscardedSid;
  if (name == "scored") return Stage::kScored;
  if (name == "failed") return Stage::kFailed;
  throw Error("ParseError", "unknown stage '" + name + "'");
}

}  // namespace

PipelineDecision process_window(const AudioClip &clip,
                                const DetectorSet &detectors,
                                const SpeakerSet &enrolled,
                                const std::string &window_id,
                                double timestamp_s) {
  PipelineDecision d;
  d.window_id = window_id;
  d.timestamp_s = timestamp_s;

  try {
    d.vad = detectors.vad(clip);
  } catch (const std::exception &ex) {
    d.stage = Stage::kFailed;
    d.error = std::string("vad: ") + ex.what();
    return d;
  }
  if (!d.vad->is_speech) {
    d.stage = Stage::kDiscardedVad;
    return d;
  }

  try {
    d.sid = detectors.sid(clip);
  } catch (const std::exception &ex) {
    d.stage = Stage::kFailed;
    d.error = std::string("sid: ") + ex.what();
    return d;
  }
  // The verdict may only name enrolled identities.
  SpeakerSet registered;
  for (SpeakerId id : d.sid->speakers)
    if (enrolled.count(id)) registered.insert(id);
  d.sid->speakers = registered;
  if (d.sid->speakers.empty()) {
    d.stage = Stage::kDiscardedSid;
    return d;
  }

  try {
    d.emotion = detectors.emotion(clip);
  } catch (const std::exception &ex) {
    d.stage = Stage::kFailed;
    d.error = std::string("emotion: ") + ex.what();
    return d;
  }
  try {
    d.conflict = detectors.conflict(clip);
  } catch (const std::exception &ex) {
    d.stage = Stage::kFailed;
    d.error = std::string("conflict: ") + ex.what();
    d.emotion.reset();  // keep the gating law: both present or neither
    return d;
  }
  d.stage = Stage::kScored;
  return d;
}

RunSummary run_stream(
    const std::function<std::optional<StreamWindow>()> &source,
    const DetectorSet &detectors, const SpeakerSet &enrolled,
    const std::function<void(const PipelineDecision &)> &sink,
    int max_in_flight) {
  if (max_in_flight < 1) max_in_flight = 1;
  RunSummary summary;

  std::vector<StreamWindow> batch;
  batch.reserve(max_in_flight);
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (static_cast<int>(batch.size()) < max_in_flight) {
      auto w = source();
      if (!w) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*w));
    }
    if (batch.empty()) break;

    std::vector<PipelineDecision> decisions(batch.size());
    const int64_t n = static_cast<int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (int64_t i = 0; i < n; ++i)
      decisions[i] = process_window(batch[i].clip, detectors, enrolled,
                                    batch[i].window_id, batch[i].timestamp_s);

    // The sink observes decisions in source order no matter how the
    // batch was scheduled.
    for (const auto &d : decisions) {
      ++summary.windows_in;
      switch (d.stage) {
        case Stage::kDiscardedVad: ++summary.discarded_vad; break;
        case Stage::kDiscardedSid: ++summary.discarded_sid; break;
        case Stage::kScored: ++summary.scored; break;
        case Stage::kFailed: ++summary.failed; break;
      }
      try {
        sink(d);
      } catch (const std::exception &ex) {
        throw Error("SinkFailure",
                    std::string("after ") +
                        std::to_string(summary.windows_in) +
                        " windows: " + ex.what());
      }
    }
  }
  return summary;
}

std::string decision_to_line(const PipelineDecision &d) {
  std::vector<std::string> f(13, "-");
  f[0] = d.window_id;
  f[1] = format_g6(d.timestamp_s);
  f[2] = stage_name(d.stage);
  if (d.vad) {
    f[3] = d.vad->is_speech ? "1" : "0";
    f[4] = format_g6(d.vad->score);
  }
  if (d.sid) {
    f[5] = speaker_set_name(d.sid->speakers);
    auto care = d.sid->scores.find(SpeakerId::kCaregiver);
    auto pat = d.sid->scores.find(SpeakerId::kPatient);
    if (care != d.sid->scores.end()) f[6] = format_g6(care->second);
    if (pat != d.sid->scores.end()) f[7] = format_g6(pat->second);
  }
  if (d.emotion) {
    f[8] = d.emotion->angry ? "angry" : "not_angry";
    f[9] = format_g6(d.emotion->score);
  }
  if (d.conflict) {
    f[10] = d.conflict->in_conflict ? "1" : "0";
    f[11] = format_g6(d.conflict->score);
  }
  if (!d.error.empty()) f[12] = d.error;
  return join_fields(f);
}

PipelineDecision decision_from_line(const std::string &line) {
  auto f = split_fields(line);
  if (f.size() != 13)
    throw Error("ParseError", "decision line needs 13 fields");
  PipelineDecision d;
  d.window_id = f[0];
  d.timestamp_s = parse_double(f[1], "timestamp");
  d.stage = parse_stage(f[2]);
  if (f[3] != "-") {
    VadVerdict v;
    v.is_speech = f[3] == "1";
    v.score = parse_double(f[4], "vad score");
    d.vad = v;
  }
  if (f[5] != "-") {
    SidVerdict v;
    v.speakers = parse_speaker_set(f[5]);
    if (f[6] != "-") v.scores[SpeakerId::kCaregiver] = parse_double(f[6], "sid");
    if (f[7] != "-") v.scores[SpeakerId::kPatient] = parse_double(f[7], "sid");
    d.sid = v;
  }
  if (f[8] != "-") {
    EmotionVerdict v;
    v.angry = f[8] == "angry";
    v.score = parse_double(f[9], "emotion score");
    d.emotion = v;
  }
  if (f[10] != "-") {
    ConflictVerdict v;
    v.in_conflict = f[10] == "1";
    v.score = parse_double(f[11], "conflict score");
    d.conflict = v;
  }
  if (f[12] != "-") d.error = f[12];
  return d;
}

std::vector<PipelineDecision> load_decision_log(const std::string &path) {
  auto records = read_records(path);
  std::vector<PipelineDecision> out;
  out.reserve(records.size());
  for (const auto &r : records) out.push_back(decision_from_line(join_fields(r)));
  return out;
}

}  // namespace homevox
