// homevox/eval/report.h

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
#include <string>
#include <vector>

#include "homevox/eval/metrics.h"

namespace homevox {

// One metric-table row; metrics are always recomputed from the stored
// counts, never cached, so a saved report can be re-rendered exactly.
struct ReportRow {
  std::string key;  // "overall", "condition:clean", "home:h1/caregiver"...
  ConfusionCounts counts;
  std::string flag = "-";  // "imbalanced", "no_positives", or "-"
};

struct EvalReport {
  std::string detector;
  uint64_t seed = 0;
  std::string manifest_hash = "-";
  std::string timestamp = "-";  // stays "-" unless the caller stamps it
  std::vector<ReportRow> rows;  // kept sorted by key

  void sort_rows();
};

// CSV with '#' metadata header; byte-identical for identical reports.
std::string render_csv(const EvalReport &report);

// Fixed-width table for the terminal, same determinism.
std::string render_table(const EvalReport &report);

void save_report(const EvalReport &report, const std::string &path);
EvalReport load_report(const std::string &path);

}  // namespace homevox
