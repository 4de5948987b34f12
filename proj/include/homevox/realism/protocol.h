// homevox/realism/protocol.h

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
#include <optional>
#include <string>
#include <vector>

#include "homevox/dataset/sample.h"
#include "homevox/realism/distortion.h"
#include "homevox/realism/noise_catalog.h"

namespace homevox {

struct ProtocolEntry {
  LabeledSample sample;
  std::optional<DistortionSpec> spec;  // absent for clean and field samples
};

// The four-condition pre-deployment dataset: one clean, one
// deamplified+noise, one reverberated, and one all-three variant per
// clean original. Distortion never changes a label.
struct ProtocolDataset {
  uint64_t seed = 0;
  std::map<Condition, std::vector<ProtocolEntry>> conditions;

  size_t total() const;
};

// Draws the per-sample specs. Each sample's RNG stream derives from
// (seed, sample index), so construction can run in any schedule. The
// deamp+noise and all-three sets share gain and noise per sample, and
// the reverb and all-three sets share reverb parameters, mirroring how
// the protocol builds each set from copies of the previous one.
// Clean inputs must all be window-length.
ProtocolDataset build_protocol_dataset(
    const std::vector<LabeledSample> &clean, const NoiseCatalog &catalog,
    uint64_t seed, double window_seconds = 5.0);

// Renders distorted WAVs under out_dir/<condition>/ and writes
// out_dir/manifest.tsv. Byte-identical output for a fixed seed.
// Returns the manifest path.
std::string materialize_protocol_dataset(const ProtocolDataset &dataset,
                                         const NoiseCatalog &catalog,
                                         const std::string &out_dir);

// Manifest records: sample_id, condition, is_speech, speakers, emotion,
// conflict, home_id, then the 7 spec fields, then path.
std::vector<ProtocolEntry> load_protocol_manifest(const std::string &path,
                                                  uint64_t *seed_out = nullptr);

}  // namespace homevox
