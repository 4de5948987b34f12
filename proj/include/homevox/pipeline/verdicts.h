// homevox/pipeline/verdicts.h

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

#include "homevox/dataset/sample.h"

namespace homevox {

// Scores are always in [0, 1].

struct VadVerdict {
  bool is_speech = false;
  double score = 0.0;
};

struct SidVerdict {
  SpeakerSet speakers;                  // subset of the enrolled identities
  std::map<SpeakerId, double> scores;   // one per enrolled profile
};

struct EmotionVerdict {
  bool angry = false;
  double score = 0.0;
};

struct ConflictVerdict {
  bool in_conflict = false;
  double score = 0.0;
};

}  // namespace homevox
