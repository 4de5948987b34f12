// src/eval/metrics.cc

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

#include "homevox/eval/metrics.h"

#include "homevox/util/error.h"

namespace homevox {

double accuracy(const ConfusionCounts &c) {
  if (c.total() == 0) throw Error("EmptyCounts", "accuracy of zero samples");
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

double precision(const ConfusionCounts &c) {
  if (c.tp + c.fp == 0)
    throw Error("EmptyCounts", "precision with no positive predictions");
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

double recall(const ConfusionCounts &c) {
  if (c.tp + c.fn == 0)
    throw Error("EmptyCounts", "recall with no positive labels");
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

bool f1_defined(const ConfusionCounts &c) {
  return c.tp + c.fp + c.fn > 0;
}

double f1(const ConfusionCounts &c) {
  if (!f1_defined(c))
    throw Error("UndefinedF1", "no positives in labels or predictions");
  if (c.tp == 0) return 0.0;
  return 2.0 * static_cast<double>(c.tp) /
         static_cast<double>(2 * c.tp + c.fp + c.fn);
}

}  // namespace homevox
