// src/realism/protocol.cc

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

#include "homevox/realism/protocol.h"

#include <cstdint>
#include <filesystem>
#include <fstream>

#include "homevox/audio/wav_io.h"
#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

namespace fs = std::filesystem;

size_t ProtocolDataset::total() const {
  size_t n = 0;
  for (const auto &[cond, entries] : conditions) n += entries.size();
  return n;
}

ProtocolDataset build_protocol_dataset(const std::vector<LabeledSample> &clean,
                                       const NoiseCatalog &catalog,
                                       uint64_t seed, double window_seconds) {
  ProtocolDataset ds;
  ds.seed = seed;
  for (Condition c : protocol_conditions()) ds.conditions[c] = {};

  for (size_t i = 0; i < clean.size(); ++i) {
    const LabeledSample &src = clean[i];
    const uint64_t sample_seed = mix_seed(seed, i);
    // One full draw per sample; each condition keeps the fields it uses,
    // so gain/noise and reverb parameters are shared across sets exactly
    // as the protocol reuses copies.
    DistortionSpec full = sample_distortion(sample_seed, catalog,
                                            Condition::kAllThree,
                                            window_seconds);
    for (Condition cond : protocol_conditions()) {
      ProtocolEntry entry;
      entry.sample = src;
      entry.sample.condition = cond;
      entry.sample.sample_id = src.sample_id + "__" + condition_name(cond);
      switch (cond) {
        case Condition::kClean:
          break;
        case Condition::kDeampNoise: {
          DistortionSpec s;
          s.seed = sample_seed;
          s.gain_db = full.gain_db;
          s.noise = full.noise;
          entry.spec = s;
          break;
        }
        case Condition::kReverb: {
          DistortionSpec s;
          s.seed = sample_seed;
          s.reverb = full.reverb;
          entry.spec = s;
          break;
        }
        case Condition::kAllThree:
          entry.spec = full;
          break;
        default:
          break;
      }
      ds.conditions[cond].push_back(std::move(entry));
    }
  }
  return ds;
}

namespace {

std::vector<std::string> manifest_fields(const ProtocolEntry &e,
                                         const std::string &rel_path) {
  const LabeledSample &s = e.sample;
  std::vector<std::string> f = {
      s.sample_id,
      condition_name(s.condition),
      s.is_speech ? "1" : "0",
      speaker_set_name(s.speakers),
      s.angry ? "angry" : "not_angry",
      s.conflict ? "1" : "0",
      s.home_id};
  DistortionSpec spec;  // clean rows serialize an all-absent spec
  if (e.spec) spec = *e.spec;
  auto spec_fields = spec.to_fields();
  if (!e.spec) spec_fields[6] = "-";
  f.insert(f.end(), spec_fields.begin(), spec_fields.end());
  f.push_back(rel_path);
  return f;
}

}  // namespace

std::string materialize_protocol_dataset(const ProtocolDataset &dataset,
                                         const NoiseCatalog &catalog,
                                         const std::string &out_dir) {
  fs::create_directories(out_dir);

  struct Job {
    const ProtocolEntry *entry;
    std::string rel_path;
    std::string abs_path;
  };
  std::vector<Job> jobs;
  for (Condition cond : protocol_conditions()) {
    auto it = dataset.conditions.find(cond);
    if (it == dataset.conditions.end()) continue;
    fs::create_directories(fs::path(out_dir) / condition_name(cond));
    for (const auto &entry : it->second) {
      Job j;
      j.entry = &entry;
      j.rel_path = condition_name(cond) + "/" + entry.sample.sample_id + ".wav";
      j.abs_path = (fs::path(out_dir) / j.rel_path).string();
      jobs.push_back(std::move(j));
    }
  }

  // Clean originals load once; every condition reuses them.
  std::map<std::string, AudioClip> sources;
  for (const auto &j : jobs)
    sources.emplace(j.entry->sample.path, AudioClip{});
  std::vector<std::map<std::string, AudioClip>::iterator> source_its;
  for (auto it = sources.begin(); it != sources.end(); ++it)
    source_its.push_back(it);
  const int64_t n_sources = static_cast<int64_t>(source_its.size());
#pragma omp parallel for schedule(dynamic) if (n_sources > 1)
  for (int64_t i = 0; i < n_sources; ++i)
    source_its[i]->second = load_wav(source_its[i]->first);

  const int64_t n_jobs = static_cast<int64_t>(jobs.size());
  std::string first_error;
#pragma omp parallel for schedule(dynamic) if (n_jobs > 1)
  for (int64_t i = 0; i < n_jobs; ++i) {
    try {
      const Job &j = jobs[i];
      const AudioClip &src = sources.at(j.entry->sample.path);
      AudioClip out = j.entry->spec
                          ? compose_distortion(src, *j.entry->spec, catalog)
                          : src;
      out.id = j.entry->sample.sample_id;
      save_wav(out, j.abs_path);
    } catch (const std::exception &ex) {
#pragma omp critical
      if (first_error.empty()) first_error = ex.what();
    }
  }
  if (!first_error.empty()) throw Error("RenderFailure", first_error);

  const std::string manifest_path =
      (fs::path(out_dir) / "manifest.tsv").string();
  std::ofstream out(manifest_path, std::ios::trunc);
  if (!out) throw Error("IoFailure", "cannot write " + manifest_path);
  out << "# homevox protocol v1\n";
  out << "# seed: " << dataset.seed << "\n";
  for (const auto &j : jobs)
    out << join_fields(manifest_fields(*j.entry, j.rel_path)) << "\n";
  return manifest_path;
}

std::vector<ProtocolEntry> load_protocol_manifest(const std::string &path,
                                                  uint64_t *seed_out) {
  if (seed_out) {
    *seed_out = 0;
    std::ifstream in(path);
    if (!in) throw Error("IoFailure", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("# seed: ", 0) == 0) {
        *seed_out = static_cast<uint64_t>(
            parse_u64(line.substr(8), "manifest seed"));
        break;
      }
    }
  }
  const auto base = fs::path(path).parent_path();
  std::vector<int> lines;
  auto records = read_records(path, &lines);
  std::vector<ProtocolEntry> entries;
  entries.reserve(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    const auto &r = records[i];
    if (r.size() != 15)
      throw Error("ParseError", path + ":" + std::to_string(lines[i]) +
                                    ": expected 15 fields");
    ProtocolEntry e;
    e.sample.sample_id = r[0];
    e.sample.condition = parse_condition(r[1]);
    e.sample.is_speech = parse_long(r[2], "is_speech") != 0;
    e.sample.speakers = parse_speaker_set(r[3]);
    e.sample.angry = r[4] == "angry";
    e.sample.conflict = parse_long(r[5], "conflict") != 0;
    e.sample.home_id = r[6];
    std::vector<std::string> spec_fields(r.begin() + 7, r.begin() + 14);
    bool has_spec = false;
    for (size_t k = 0; k + 1 < spec_fields.size(); ++k)
      if (spec_fields[k] != "-") has_spec = true;
    if (has_spec) e.spec = DistortionSpec::from_fields(spec_fields);
    fs::path p(r[14]);
    e.sample.path = p.is_absolute() ? p.string() : (base / p).string();
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace homevox
