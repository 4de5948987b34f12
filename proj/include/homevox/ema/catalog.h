// homevox/ema/catalog.h

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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homevox/util/rng.h"

namespace homevox {

enum class Category { kBreathing, kTimeout, kMindfulness, kEnjoyableActivities };

std::string category_name(Category c);
Category parse_category(const std::string &name);
const std::vector<Category> &all_categories();

enum class TriggerKind { kAnger, kConflict };

std::string trigger_name(TriggerKind t);
TriggerKind parse_trigger(const std::string &name);

// Intervention wording store. Sectioned text file:
//   [participants]           one id per line
//   [breathing] [timeout] [mindfulness] [enjoyable_activities]
//                             one message per line, all four required
//   [enjoyable_activities:<participant>]   personalized activities
//   [positive_feedback]       at least one template
struct MessageCatalog {
  int version = 1;
  std::map<Category, std::vector<std::string>> categories;
  std::map<std::string, std::vector<std::string>> personalized;
  std::vector<std::string> positive_feedback;
  std::set<std::string> participants;

  bool knows(const std::string &participant) const;
};

// Throws Error("MissingCategory") / Error("EmptyMessage") /
// Error("UnknownParticipant") with the offending line number.
MessageCatalog load_catalog(const std::string &path);
MessageCatalog parse_catalog(const std::string &text,
                             const std::string &origin = "<memory>");

// Serving handle with atomic swap semantics. Selections hold a snapshot
// for their whole run, so an in-flight selection finishes on the version
// it started with; a failed reload keeps the previous catalog serving.
class CatalogService {
 public:
  explicit CatalogService(MessageCatalog initial);

  std::shared_ptr<const MessageCatalog> snapshot() const;
  int version() const;

  // Parses the file; on success swaps it in with version+1 and returns
  // the new version. On failure the old catalog stays active and the
  // parse error is rethrown.
  int hot_reload(const std::string &path);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const MessageCatalog> current_;
};

struct RecommendationEvent {
  std::string event_id;
  std::string participant;
  TriggerKind trigger = TriggerKind::kAnger;
  Category category = Category::kBreathing;
  std::string text;
  int catalog_version = 0;
  int64_t timestamp = 0;
};

struct ResponseRecord {
  std::string event_id;
  bool implemented = false;
  int64_t timestamp = 0;
};

// Selection policy state, persistable as a flat key-value file.
struct PolicyState {
  int round_robin_cursor = 0;
  std::map<Category, int> implemented;
  std::map<Category, int> responses;

  double implemented_rate(Category c) const;

  static PolicyState load(const std::string &path);
  void save(const std::string &path) const;
};

enum class PolicyKind { kRoundRobin, kEpsilonGreedy };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kRoundRobin;
  double epsilon = 0.1;  // epsilon-greedy only
};

// Picks a category by policy, then wording uniformly inside it; the
// personalized list replaces the generic enjoyable_activities pool when
// the participant has one. Advances the round-robin cursor in state.
// Throws Error("UnknownParticipant").
RecommendationEvent select_message(const MessageCatalog &catalog,
                                   const std::string &participant,
                                   TriggerKind trigger,
                                   const PolicyConfig &policy,
                                   PolicyState &state, uint64_t rng_seed,
                                   int64_t timestamp = 0);

// Updates the per-category rates and, when implemented, returns the
// positive-feedback message to send immediately.
std::pair<ResponseRecord, std::optional<std::string>> record_response(
    const RecommendationEvent &event, bool implemented,
    const MessageCatalog &catalog, PolicyState &state, int64_t timestamp);

// Event/response logs, tab-separated.
void append_event(const std::string &path, const RecommendationEvent &event);
std::vector<RecommendationEvent> load_events(const std::string &path);
void append_response(const std::string &path, const ResponseRecord &record);
std::vector<ResponseRecord> load_responses(const std::string &path);

}  // namespace homevox
