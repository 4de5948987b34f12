// src/realism/noise_catalog.cc

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

#include "homevox/realism/noise_catalog.h"

#include <filesystem>

#include "homevox/audio/wav_io.h"
#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

const std::set<std::string> &default_event_vocabulary() {
  static const std::set<std::string> kEvents = {
      "(object) rustling", "(object) snapping", "cupboard",
      "cutlery",           "dishes",            "drawers",
      "glass jingling",    "object impact",     "people walking",
      "washing dishes",    "water tap running"};
  return kEvents;
}

NoiseCatalog NoiseCatalog::load(const std::string &index_path,
                                const std::set<std::string> &vocabulary,
                                double min_duration_s) {
  const auto base = std::filesystem::path(index_path).parent_path();
  std::vector<int> lines;
  auto records = read_records(index_path, &lines);
  NoiseCatalog catalog;
  for (size_t i = 0; i < records.size(); ++i) {
    const auto &r = records[i];
    auto where = [&] {
      return index_path + ":" + std::to_string(lines[i]);
    };
    if (r.size() != 4)
      throw Error("ParseError", where() + ": expected 4 fields");
    NoiseEntry e;
    e.clip_id = r[0];
    e.event_tag = r[1];
    std::filesystem::path p(r[2]);
    e.path = p.is_absolute() ? p.string() : (base / p).string();
    e.duration_s = parse_double(r[3], "duration_s");
    if (!vocabulary.count(e.event_tag))
      throw Error("ParseError",
                  where() + ": event tag '" + e.event_tag +
                      "' not in the catalog vocabulary");
    if (e.duration_s < min_duration_s)
      throw Error("ParseError", where() + ": entry shorter than " +
                                    format_g6(min_duration_s) + " s");
    catalog.entries_.push_back(std::move(e));
  }
  return catalog;
}

const NoiseEntry &NoiseCatalog::entry(const std::string &clip_id) const {
  for (const auto &e : entries_)
    if (e.clip_id == clip_id) return e;
  throw Error("UnknownNoiseEntry", "no catalog entry '" + clip_id + "'");
}

AudioClip NoiseCatalog::load_clip(const std::string &clip_id) const {
  return load_wav(entry(clip_id).path);
}

}  // namespace homevox
