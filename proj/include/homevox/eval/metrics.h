// homevox/eval/metrics.h

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

namespace homevox {

struct ConfusionCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t tn = 0;
  uint64_t fn = 0;

  uint64_t total() const { return tp + fp + tn + fn; }
  void add(bool label, bool prediction) {
    if (label && prediction) ++tp;
    else if (!label && prediction) ++fp;
    else if (label && !prediction) ++fn;
    else ++tn;
  }
  ConfusionCounts &operator+=(const ConfusionCounts &o) {
    tp += o.tp; fp += o.fp; tn += o.tn; fn += o.fn;
    return *this;
  }
};

// (tp+tn) / total. Throws Error("EmptyCounts") when total is 0.
double accuracy(const ConfusionCounts &c);

// tp / (tp+fp). Throws Error("EmptyCounts") when tp+fp is 0.
double precision(const ConfusionCounts &c);

// tp / (tp+fn). Throws Error("EmptyCounts") when tp+fn is 0.
double recall(const ConfusionCounts &c);

// 2tp / (2tp+fp+fn); defined as 0 when tp = 0 and fp+fn > 0.
// Throws Error("UndefinedF1") when tp = fp = fn = 0.
double f1(const ConfusionCounts &c);

bool f1_defined(const ConfusionCounts &c);

}  // namespace homevox
