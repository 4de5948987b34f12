// src/eval/evaluate.cc

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

#include "homevox/eval/evaluate.h"

#include <algorithm>

#include "homevox/util/error.h"
#include "homevox/util/record.h"
#include "homevox/util/rng.h"

namespace homevox {

namespace {

template <typename T>
const T &prediction_for(const std::map<std::string, T> &predictions,
                        const std::string &sample_id) {
  auto it = predictions.find(sample_id);
  if (it == predictions.end())
    throw Error("MissingPrediction", "no prediction for " + sample_id);
  return it->second;
}

}  // namespace

EvalReport evaluate_vad(const std::map<std::string, bool> &predictions,
                        const std::vector<ProtocolEntry> &manifest) {
  EvalReport report;
  report.detector = "vad";
  ConfusionCounts overall;
  std::map<Condition, ConfusionCounts> per_condition;
  for (const auto &entry : manifest) {
    bool pred = prediction_for(predictions, entry.sample.sample_id);
    overall.add(entry.sample.is_speech, pred);
    per_condition[entry.sample.condition].add(entry.sample.is_speech, pred);
  }
  report.rows.push_back({"overall", overall, "-"});
  for (const auto &[cond, counts] : per_condition) {
    if (counts.total() == 0) continue;  // empty condition: row omitted
    report.rows.push_back({"condition:" + condition_name(cond), counts, "-"});
  }
  report.sort_rows();
  return report;
}

EvalReport evaluate_sid(const std::map<std::string, SpeakerSet> &predictions,
                        const std::vector<LabeledSample> &labels) {
  EvalReport report;
  report.detector = "sid";
  std::map<std::string, ConfusionCounts> rows;
  const SpeakerId identities[] = {SpeakerId::kCaregiver, SpeakerId::kPatient};
  for (const auto &sample : labels) {
    const SpeakerSet &pred = prediction_for(predictions, sample.sample_id);
    for (SpeakerId who : identities) {
      bool label_pos = sample.speakers.count(who) > 0;
      bool pred_pos = pred.count(who) > 0;
      rows["home:" + sample.home_id + "/" + speaker_name(who)].add(label_pos,
                                                                   pred_pos);
    }
  }
  for (const auto &[key, counts] : rows) report.rows.push_back({key, counts, "-"});
  report.sort_rows();
  return report;
}

EvalReport evaluate_emotion_balanced(
    const std::vector<PipelineDecision> &decisions,
    const std::map<std::string, LabeledSample> &labels, uint64_t seed) {
  EvalReport report;
  report.detector = "emotion";
  report.seed = seed;

  struct HomePool {
    std::vector<const PipelineDecision *> anger;
    std::vector<const PipelineDecision *> other;
  };
  std::map<std::string, HomePool> homes;
  for (const auto &d : decisions) {
    if (!d.emotion) continue;
    auto it = labels.find(d.window_id);
    if (it == labels.end())
      throw Error("MissingLabel", "no label for window " + d.window_id);
    HomePool &pool = homes[it->second.home_id];
    (d.emotion->angry ? pool.anger : pool.other).push_back(&d);
  }

  size_t home_index = 0;
  for (auto &[home_id, pool] : homes) {
    ReportRow row;
    row.key = "home:" + home_id;
    if (pool.anger.empty()) {
      row.flag = "no_positives";
      report.rows.push_back(row);
      ++home_index;
      continue;
    }
    // Deterministic draw: negatives sorted by window id, then a seeded
    // Fisher-Yates prefix of the anger count.
    std::sort(pool.other.begin(), pool.other.end(),
              [](const PipelineDecision *a, const PipelineDecision *b) {
                return a->window_id < b->window_id;
              });
    const size_t want = pool.anger.size();
    Rng rng = Rng::derive(seed, home_index);
    std::vector<const PipelineDecision *> negatives = pool.other;
    for (size_t i = 0; i < negatives.size(); ++i) {
      size_t j = i + static_cast<size_t>(
                         rng.uniform_index(negatives.size() - i));
      std::swap(negatives[i], negatives[j]);
    }
    if (negatives.size() > want) negatives.resize(want);
    if (negatives.size() < want) row.flag = "imbalanced";

    for (const auto *d : pool.anger)
      row.counts.add(labels.at(d->window_id).angry, true);
    for (const auto *d : negatives)
      row.counts.add(labels.at(d->window_id).angry, false);
    report.rows.push_back(row);
    ++home_index;
  }
  report.sort_rows();
  return report;
}

EvalReport evaluate_conflict(const std::map<std::string, bool> &predictions,
                             const std::vector<LabeledSample> &labels) {
  EvalReport report;
  report.detector = "conflict";
  std::map<std::string, ConfusionCounts> rows;
  for (const auto &sample : labels) {
    bool pred = prediction_for(predictions, sample.sample_id);
    rows["home:" + sample.home_id].add(sample.conflict, pred);
  }
  for (const auto &[key, counts] : rows) report.rows.push_back({key, counts, "-"});
  report.sort_rows();
  return report;
}

std::map<std::string, bool> load_bool_predictions(const std::string &path) {
  std::map<std::string, bool> out;
  for (const auto &r : read_records(path)) {
    if (r.size() != 2)
      throw Error("ParseError", path + ": prediction rows need 2 fields");
    out[r[0]] = parse_long(r[1], "prediction") != 0;
  }
  return out;
}

std::map<std::string, SpeakerSet> load_sid_predictions(
    const std::string &path) {
  std::map<std::string, SpeakerSet> out;
  for (const auto &r : read_records(path)) {
    if (r.size() != 2)
      throw Error("ParseError", path + ": prediction rows need 2 fields");
    out[r[0]] = parse_speaker_set(r[1]);
  }
  return out;
}

}  // namespace homevox
