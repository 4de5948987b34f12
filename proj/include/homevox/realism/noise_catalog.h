// homevox/realism/noise_catalog.h

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

#include <set>
#include <string>
#include <vector>

#include "homevox/audio/clip.h"

namespace homevox {

// The household sound events the stock catalogs are tagged with.
const std::set<std::string> &default_event_vocabulary();

struct NoiseEntry {
  std::string clip_id;
  std::string event_tag;
  std::string path;  // resolved against the index file's directory
  double duration_s = 0.0;
};

// A directory of household-noise WAVs plus an index file of
// tab-separated records: clip_id, event_tag, path, duration_s.
// Every entry must be at least one window long so a window-length
// segment can always be cut from it.
class NoiseCatalog {
 public:
  static NoiseCatalog load(const std::string &index_path,
                           const std::set<std::string> &vocabulary =
                               default_event_vocabulary(),
                           double min_duration_s = 5.0);

  const std::vector<NoiseEntry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  const NoiseEntry &entry(const std::string &clip_id) const;

  AudioClip load_clip(const std::string &clip_id) const;

 private:
  std::vector<NoiseEntry> entries_;
};

}  // namespace homevox
