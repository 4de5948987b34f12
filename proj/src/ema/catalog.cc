// src/ema/catalog.cc

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

#include "homevox/ema/catalog.h"

#include <fstream>
#include <sstream>

#include "homevox/util/error.h"
#include "homevox/util/kv.h"
#include "homevox/util/record.h"

namespace homevox {

std::string category_name(Category c) {
  switch (c) {
    case Category::kBreathing: return "breathing";
    case Category::kTimeout: return "timeout";
    case Category::kMindfulness: return "mindfulness";
    case Category::kEnjoyableActivities: return "enjoyable_activities";
  }
  return "breathing";
}

Category parse_category(const std::string &name) {
  for (Category c : all_categories())
    if (category_name(c) == name) return c;
  throw Error("ParseError", "unknown category '" + name + "'");
}

const std::vector<Category> &all_categories() {
  static const std::vector<Category> kAll = {
      Category::kBreathing, Category::kTimeout, Category::kMindfulness,
      Category::kEnjoyableActivities};
  return kAll;
}

std::string trigger_name(TriggerKind t) {
  return t == TriggerKind::kAnger ? "anger" : "conflict";
}

TriggerKind parse_trigger(const std::string &name) {
  if (name == "anger") return TriggerKind::kAnger;
  if (name == "conflict") return TriggerKind::kConflict;
  throw Error("ParseError", "unknown trigger '" + name + "'");
}

bool MessageCatalog::knows(const std::string &participant) const {
  return participants.count(participant) > 0 ||
         personalized.count(participant) > 0;
}

MessageCatalog load_catalog(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("IoFailure", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), path);
}

MessageCatalog parse_catalog(const std::string &text,
                             const std::string &origin) {
  MessageCatalog catalog;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  enum class SectionKind { kNone, kParticipants, kCategory, kPersonal, kFeedback };
  SectionKind section = SectionKind::kNone;
  Category current_category = Category::kBreathing;
  std::string current_participant;
  std::map<std::string, int> section_lines;  // for empty-section reporting

  auto fail = [&](const std::string &code, const std::string &msg, int at) {
    throw Error(code, origin + ":" + std::to_string(at) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t");
    std::string t = line.substr(a, b - a + 1);
    if (t[0] == '#') continue;

    if (t.front() == '[') {
      if (t.back() != ']')
        fail("ParseError", "unterminated section header", lineno);
      std::string name = t.substr(1, t.size() - 2);
      section_lines[name] = lineno;
      if (name == "participants") {
        section = SectionKind::kParticipants;
      } else if (name == "positive_feedback") {
        section = SectionKind::kFeedback;
      } else if (size_t colon = name.find(':'); colon != std::string::npos) {
        std::string cat = name.substr(0, colon);
        if (cat != "enjoyable_activities")
          fail("ParseError", "only enjoyable_activities can be personalized",
               lineno);
        current_participant = name.substr(colon + 1);
        if (current_participant.empty())
          fail("ParseError", "empty participant name", lineno);
        section = SectionKind::kPersonal;
        catalog.personalized[current_participant];
      } else {
        current_category = parse_category(name);
        section = SectionKind::kCategory;
        catalog.categories[current_category];
      }
      continue;
    }

    switch (section) {
      case SectionKind::kNone:
        fail("ParseError", "message text before any section header", lineno);
        break;
      case SectionKind::kParticipants:
        catalog.participants.insert(t);
        break;
      case SectionKind::kCategory:
        catalog.categories[current_category].push_back(t);
        break;
      case SectionKind::kPersonal:
        catalog.personalized[current_participant].push_back(t);
        break;
      case SectionKind::kFeedback:
        catalog.positive_feedback.push_back(t);
        break;
    }
  }

  for (Category c : all_categories()) {
    auto it = catalog.categories.find(c);
    if (it == catalog.categories.end())
      throw Error("MissingCategory",
                  origin + ": category '" + category_name(c) + "' is missing");
    if (it->second.empty())
      fail("EmptyMessage", "category '" + category_name(c) + "' has no messages",
           section_lines[category_name(c)]);
  }
  if (catalog.positive_feedback.empty())
    throw Error("EmptyMessage", origin + ": positive_feedback needs at least "
                                         "one template");
  for (const auto &[who, msgs] : catalog.personalized) {
    if (msgs.empty())
      fail("EmptyMessage", "personalized list for '" + who + "' is empty",
           section_lines["enjoyable_activities:" + who]);
    catalog.participants.insert(who);
  }
  return catalog;
}

CatalogService::CatalogService(MessageCatalog initial) {
  initial.version = 1;
  current_ = std::make_shared<const MessageCatalog>(std::move(initial));
}

std::shared_ptr<const MessageCatalog> CatalogService::snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return current_;
}

int CatalogService::version() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return current_->version;
}

int CatalogService::hot_reload(const std::string &path) {
  MessageCatalog next = load_catalog(path);  // throws; old catalog untouched
  std::lock_guard<std::mutex> lock(mutex_);
  next.version = current_->version + 1;
  current_ = std::make_shared<const MessageCatalog>(std::move(next));
  return current_->version;
}

double PolicyState::implemented_rate(Category c) const {
  auto r = responses.find(c);
  if (r == responses.end() || r->second == 0) return 0.0;
  auto i = implemented.find(c);
  int done = i == implemented.end() ? 0 : i->second;
  return static_cast<double>(done) / static_cast<double>(r->second);
}

PolicyState PolicyState::load(const std::string &path) {
  KvFile kv = KvFile::load(path);
  PolicyState s;
  s.round_robin_cursor = static_cast<int>(kv.get_long("round_robin_cursor", 0));
  for (Category c : all_categories()) {
    s.implemented[c] =
        static_cast<int>(kv.get_long("implemented_" + category_name(c), 0));
    s.responses[c] =
        static_cast<int>(kv.get_long("responses_" + category_name(c), 0));
  }
  return s;
}

void PolicyState::save(const std::string &path) const {
  KvFile kv;
  kv.set("round_robin_cursor", std::to_string(round_robin_cursor));
  for (Category c : all_categories()) {
    auto i = implemented.find(c);
    auto r = responses.find(c);
    kv.set("implemented_" + category_name(c),
           std::to_string(i == implemented.end() ? 0 : i->second));
    kv.set("responses_" + category_name(c),
           std::to_string(r == responses.end() ? 0 : r->second));
  }
  kv.save(path);
}

RecommendationEvent select_message(const MessageCatalog &catalog,
                                   const std::string &participant,
                                   TriggerKind trigger,
                                   const PolicyConfig &policy,
                                   PolicyState &state, uint64_t rng_seed,
                                   int64_t timestamp) {
  if (!catalog.knows(participant))
    throw Error("UnknownParticipant", "'" + participant + "' is not enrolled");

  Rng rng(rng_seed);
  Category category;
  if (policy.kind == PolicyKind::kRoundRobin) {
    const auto &order = all_categories();
    category = order[state.round_robin_cursor % order.size()];
    state.round_robin_cursor =
        (state.round_robin_cursor + 1) % static_cast<int>(order.size());
  } else {
    if (rng.bernoulli(policy.epsilon)) {
      category = all_categories()[rng.uniform_index(all_categories().size())];
    } else {
      category = all_categories().front();
      double best = -1.0;
      for (Category c : all_categories()) {  // fixed order breaks ties
        double rate = state.implemented_rate(c);
        if (rate > best) {
          best = rate;
          category = c;
        }
      }
    }
  }

  const std::vector<std::string> *pool = &catalog.categories.at(category);
  if (category == Category::kEnjoyableActivities) {
    auto it = catalog.personalized.find(participant);
    if (it != catalog.personalized.end() && !it->second.empty())
      pool = &it->second;  // personal list only, never the generic one
  }

  RecommendationEvent event;
  event.participant = participant;
  event.trigger = trigger;
  event.category = category;
  event.text = (*pool)[rng.uniform_index(pool->size())];
  event.catalog_version = catalog.version;
  event.timestamp = timestamp;
  return event;
}

std::pair<ResponseRecord, std::optional<std::string>> record_response(
    const RecommendationEvent &event, bool implemented,
    const MessageCatalog &catalog, PolicyState &state, int64_t timestamp) {
  ResponseRecord record;
  record.event_id = event.event_id;
  record.implemented = implemented;
  record.timestamp = timestamp;

  state.responses[event.category] += 1;
  std::optional<std::string> feedback;
  if (implemented) {
    state.implemented[event.category] += 1;
    int total_implemented = 0;
    for (const auto &[c, n] : state.implemented) total_implemented += n;
    // Rotate through the templates so repeated feedback varies.
    feedback = catalog.positive_feedback[(total_implemented - 1) %
                                         catalog.positive_feedback.size()];
  }
  return {record, feedback};
}

void append_event(const std::string &path, const RecommendationEvent &event) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("IoFailure", "cannot append to " + path);
  out << join_fields({event.event_id, event.participant,
                      trigger_name(event.trigger),
                      category_name(event.category),
                      std::to_string(event.catalog_version),
                      std::to_string(event.timestamp), event.text})
      << "\n";
}

std::vector<RecommendationEvent> load_events(const std::string &path) {
  std::vector<RecommendationEvent> out;
  for (const auto &r : read_records(path)) {
    if (r.size() != 7)
      throw Error("ParseError", path + ": event rows need 7 fields");
    RecommendationEvent e;
    e.event_id = r[0];
    e.participant = r[1];
    e.trigger = parse_trigger(r[2]);
    e.category = parse_category(r[3]);
    e.catalog_version = static_cast<int>(parse_long(r[4], "version"));
    e.timestamp = parse_long(r[5], "timestamp");
    e.text = r[6];
    out.push_back(std::move(e));
  }
  return out;
}

void append_response(const std::string &path, const ResponseRecord &record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("IoFailure", "cannot append to " + path);
  out << join_fields({record.event_id, record.implemented ? "1" : "0",
                      std::to_string(record.timestamp)})
      << "\n";
}

std::vector<ResponseRecord> load_responses(const std::string &path) {
  std::vector<ResponseRecord> out;
  for (const auto &r : read_records(path)) {
    if (r.size() != 3)
      throw Error("ParseError", path + ": response rows need 3 fields");
    ResponseRecord rec;
    rec.event_id = r[0];
    rec.implemented = r[1] == "1";
    rec.timestamp = parse_long(r[2], "timestamp");
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace homevox
