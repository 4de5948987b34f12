// homevox/eval/evaluate.h

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

#include <map>
#include <string>
#include <vector>

#include "homevox/dataset/sample.h"
#include "homevox/eval/report.h"
#include "homevox/pipeline/pipeline.h"
#include "homevox/realism/protocol.h"

namespace homevox {

// Overall accuracy plus one row per nonempty condition. Throws
// Error("MissingPrediction") naming the first uncovered sample.
EvalReport evaluate_vad(const std::map<std::string, bool> &predictions,
                        const std::vector<ProtocolEntry> &manifest);

// Per-identity, per-home F1. A sample labeled with both identities
// counts as a positive for each, so one prediction can move two
// counters: label both + predicted {caregiver} is a caregiver tp and a
// patient fn.
EvalReport evaluate_sid(
    const std::map<std::string, SpeakerSet> &predictions,
    const std::vector<LabeledSample> &labels);

// The balanced post-deployment protocol: per home, every window the
// pipeline called angry plus an equal-count seeded draw of non-angry
// windows. Homes with too few negatives evaluate on what exists and are
// flagged "imbalanced"; homes with no predicted anger are flagged
// "no_positives".
EvalReport evaluate_emotion_balanced(
    const std::vector<PipelineDecision> &decisions,
    const std::map<std::string, LabeledSample> &labels, uint64_t seed);

// Hit/miss accounting per home: agreement on conflict presence either
// way is a hit, everything else a miss; reported as F1 per home.
EvalReport evaluate_conflict(const std::map<std::string, bool> &predictions,
                             const std::vector<LabeledSample> &labels);

// Prediction files: sample_id TAB value. Values: 0/1 for vad and
// conflict, a speaker set for sid.
std::map<std::string, bool> load_bool_predictions(const std::string &path);
std::map<std::string, SpeakerSet> load_sid_predictions(const std::string &path);

}  // namespace homevox
