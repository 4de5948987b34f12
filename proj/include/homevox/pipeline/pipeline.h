// homevox/pipeline/pipeline.h

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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homevox/audio/clip.h"
#include "homevox/pipeline/verdicts.h"

namespace homevox {

// The four detector roles. Each must be a pure function of the clip
// (profiles and configs are bound at construction) and safe to call
// concurrently on distinct clips.
struct DetectorSet {
  std::function<VadVerdict(const AudioClip &)> vad;
  std::function<SidVerdict(const AudioClip &)> sid;
  std::function<EmotionVerdict(const AudioClip &)> emotion;
  std::function<ConflictVerdict(const AudioClip &)> conflict;
};

enum class Stage { kDiscardedVad, kDiscardedSid, kScored, kFailed };

std::string stage_name(Stage s);

// Per-window verdict trail. Emotion and conflict are present exactly
// when the window passed both gates: vad.is_speech and a nonempty
// registered speaker set.
struct PipelineDecision {
  std::string window_id;
  double timestamp_s = 0.0;  // stream time of the window start
  Stage stage = Stage::kFailed;
  std::optional<VadVerdict> vad;
  std::optional<SidVerdict> sid;
  std::optional<EmotionVerdict> emotion;
  std::optional<ConflictVerdict> conflict;
  std::string error;  // "<stage>: <what>" for kFailed
};

// Runs one window through VAD -> SID -> (emotion, conflict). The two
// scoring detectors see the same clip and never each other's output.
// A detector exception marks the window kFailed with the stage name;
// the stream goes on.
PipelineDecision process_window(const AudioClip &clip,
                                const DetectorSet &detectors,
                                const SpeakerSet &enrolled,
                                const std::string &window_id,
                                double timestamp_s = 0.0);

struct RunSummary {
  size_t windows_in = 0;
  size_t discarded_vad = 0;
  size_t discarded_sid = 0;
  size_t scored = 0;
  size_t failed = 0;
};

struct StreamWindow {
  AudioClip clip;
  std::string window_id;
  double timestamp_s = 0.0;
};

// Pulls windows until the source returns nullopt, processes them (in
// parallel batches up to max_in_flight), and hands decisions to the
// sink in source order. A sink exception aborts with the partial
// summary carried inside Error("SinkFailure").
RunSummary run_stream(
    const std::function<std::optional<StreamWindow>()> &source,
    const DetectorSet &detectors, const SpeakerSet &enrolled,
    const std::function<void(const PipelineDecision &)> &sink,
    int max_in_flight = 8);

// Decision log lines: window_id, timestamp, stage, vad fields, sid
// fields, emotion fields, conflict fields, error. Absent fields are "-".
std::string decision_to_line(const PipelineDecision &d);
PipelineDecision decision_from_line(const std::string &line);
std::vector<PipelineDecision> load_decision_log(const std::string &path);

}  // namespace homevox
