// src/privacy/privacy.cc

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

#include "homevox/privacy/privacy.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "homevox/audio/wav_io.h"
#include "homevox/util/error.h"
#include "homevox/util/kv.h"
#include "homevox/util/record.h"

namespace homevox {

namespace fs = std::filesystem;

LocalTime LocalTime::parse(const std::string &text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw Error("ParseError", "local time must be HH:MM, got '" + text + "'");
  long h = parse_long(text.substr(0, colon), "hours");
  long m = parse_long(text.substr(colon + 1), "minutes");
  if (h < 0 || h > 23 || m < 0 || m > 59)
    throw Error("ParseError", "local time out of range: '" + text + "'");
  return LocalTime{static_cast<int>(h * 60 + m)};
}

std::string LocalTime::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d:%02d", minutes / 60, minutes % 60);
  return buf;
}

PrivacySettings PrivacySettings::load(const std::string &path) {
  KvFile kv = KvFile::load(path);
  PrivacySettings s;
  s.day_start = LocalTime::parse(kv.get("day_start", "08:00"));
  s.day_end = LocalTime::parse(kv.get("day_end", "20:00"));
  s.enabled = kv.get_bool("enabled", true);
  std::string mode = kv.get("retention_mode", "prosody_only");
  if (mode == "prosody_only") s.retention = Retention::kProsodyOnly;
  else if (mode == "raw_clips") s.retention = Retention::kRawClips;
  else throw Error("ParseError", "bad retention_mode '" + mode + "'");
  s.registered = parse_speaker_set(kv.get("registered", "caregiver+patient"));
  if (s.day_start.minutes == s.day_end.minutes)
    throw Error("BadSettings", "day_start and day_end must differ");
  return s;
}

void PrivacySettings::save(const std::string &path) const {
  KvFile kv;
  kv.set("day_start", day_start.str());
  kv.set("day_end", day_end.str());
  kv.set("enabled", enabled ? "true" : "false");
  kv.set("retention_mode",
         retention == Retention::kProsodyOnly ? "prosody_only" : "raw_clips");
  kv.set("registered", speaker_set_name(registered));
  kv.save(path);
}

bool gate_listen(LocalTime now, const PrivacySettings &settings) {
  if (!settings.enabled) return false;
  const int t = now.minutes;
  const int a = settings.day_start.minutes;
  const int b = settings.day_end.minutes;
  if (a < b) return t >= a && t < b;
  return t >= a || t < b;  // window wraps midnight
}

ProsodyFeatures extract_prosody(const AudioClip &clip,
                                const FeatureConfig &cfg) {
  ProsodyFeatures out;
  WindowFeatures f = extract_features(clip, cfg);
  if (f.frame_rms.empty()) return out;

  double voiced_sum = 0.0;
  size_t voiced_count = 0;
  for (float p : f.frame_pitch) {
    if (p > 0.0f) {
      voiced_sum += p;
      ++voiced_count;
    }
  }
  if (voiced_count > 0) {
    out.pitch_mean_hz = voiced_sum / static_cast<double>(voiced_count);
    double acc = 0.0;
    for (float p : f.frame_pitch)
      if (p > 0.0f) acc += (p - out.pitch_mean_hz) * (p - out.pitch_mean_hz);
    out.pitch_var_hz2 = acc / static_cast<double>(voiced_count);
  }

  double mean_rms = 0.0;
  float peak = 0.0f;
  for (float r : f.frame_rms) {
    mean_rms += r;
    peak = std::max(peak, r);
  }
  mean_rms /= static_cast<double>(f.frame_rms.size());
  double var = 0.0;
  for (float r : f.frame_rms) var += (r - mean_rms) * (r - mean_rms);
  var /= static_cast<double>(f.frame_rms.size());
  out.energy_var = mean_rms > 0.0 ? var / (mean_rms * mean_rms) : 0.0;

  if (!clip.samples.empty()) out.rms_dbfs = rms_dbfs(clip);

  // Envelope peaks: upward crossings of half the peak frame level.
  const float gate = 0.5f * peak;
  bool above = false;
  for (float r : f.frame_rms) {
    if (!above && peak > 0.0f && r >= gate) {
      ++out.energy_peak_count;
      above = true;
    } else if (r < gate) {
      above = false;
    }
  }
  return out;
}

std::string audit_action_name(AuditAction action) {
  switch (action) {
    case AuditAction::kWindowHeard: return "window_heard";
    case AuditAction::kWindowDiscardedUnregistered:
      return "window_discarded_unregistered";
    case AuditAction::kFeaturesPersisted: return "features_persisted";
    case AuditAction::kRawPersisted: return "raw_persisted";
    case AuditAction::kGatedOff: return "gated_off";
    case AuditAction::kSettingsChanged: return "settings_changed";
  }
  return "window_heard";
}

namespace {

AuditAction parse_audit_action(const std::string &name) {
  if (name == "window_heard") return AuditAction::kWindowHeard;
  if (name == "window_discarded_unregistered")
    return AuditAction::kWindowDiscardedUnregistered;
  if (name == "features_persisted") return AuditAction::kFeaturesPersisted;
  if (name == "raw_persisted") return AuditAction::kRawPersisted;
  if (name == "gated_off") return AuditAction::kGatedOff;
  if (name == "settings_changed") return AuditAction::kSettingsChanged;
  throw Error("ParseError", "unknown audit action '" + name + "'");
}

}  // namespace

AuditLog::AuditLog(const std::string &path)
    : path_(path), last_timestamp_(std::numeric_limits<int64_t>::min()) {
  if (fs::exists(path_))
    for (const auto &r : load(path_))
      last_timestamp_ = std::max(last_timestamp_, r.timestamp);
}

std::vector<AuditRecord> AuditLog::load(const std::string &path) {
  std::vector<AuditRecord> out;
  for (const auto &r : read_records(path)) {
    if (r.size() != 3)
      throw Error("ParseError", path + ": audit rows need 3 fields");
    AuditRecord rec;
    rec.timestamp = parse_long(r[0], "timestamp");
    rec.action = parse_audit_action(r[1]);
    if (r[2] != "-") rec.window_id = r[2];
    out.push_back(std::move(rec));
  }
  return out;
}

void AuditLog::append(const AuditRecord &record) {
  if (record.timestamp < last_timestamp_)
    throw Error("AuditOrder", "audit timestamps must be non-decreasing");
  last_timestamp_ = record.timestamp;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("IoFailure", "cannot append to " + path_);
  out << record.timestamp << '\t' << audit_action_name(record.action) << '\t'
      << (record.window_id.empty() ? "-" : record.window_id) << '\n';
}

ArtifactStore::ArtifactStore(const std::string &dir) : dir_(dir) {
  fs::create_directories(dir_);
  fs::create_directories(fs::path(dir_) / "clips");
}

size_t ArtifactStore::put_features(const std::string &window_id,
                                   int64_t timestamp,
                                   const ProsodyFeatures &f) {
  std::string line = join_fields(
      {window_id, std::to_string(timestamp), format_g6(f.pitch_mean_hz),
       format_g6(f.pitch_var_hz2), format_g6(f.rms_dbfs),
       format_g6(f.energy_var), std::to_string(f.energy_peak_count)});
  line += '\n';
  std::ofstream out(fs::path(dir_) / "prosody.tsv", std::ios::app);
  if (!out) throw Error("StoreFailure", "cannot append prosody record");
  out << line;
  return line.size();
}

std::string ArtifactStore::clip_path(const std::string &window_id) const {
  return (fs::path(dir_) / "clips" / (window_id + ".wav")).string();
}

void ArtifactStore::put_clip(const std::string &window_id,
                             const AudioClip &clip) {
  save_wav(clip, clip_path(window_id));
}

std::vector<ArtifactStore::StoredWindow> ArtifactStore::list() const {
  std::vector<StoredWindow> out;
  const auto prosody = fs::path(dir_) / "prosody.tsv";
  if (!fs::exists(prosody)) return out;
  for (const auto &r : read_records(prosody.string())) {
    if (r.size() != 7)
      throw Error("ParseError", "prosody records need 7 fields");
    StoredWindow w;
    w.window_id = r[0];
    w.timestamp = parse_long(r[1], "timestamp");
    w.features.pitch_mean_hz = parse_double(r[2], "pitch_mean");
    w.features.pitch_var_hz2 = parse_double(r[3], "pitch_var");
    w.features.rms_dbfs = parse_double(r[4], "rms_dbfs");
    w.features.energy_var = parse_double(r[5], "energy_var");
    w.features.energy_peak_count =
        static_cast<int>(parse_long(r[6], "peak_count"));
    w.has_clip = fs::exists(clip_path(w.window_id));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> ArtifactStore::content_types() const {
  std::vector<std::string> types;
  if (fs::exists(fs::path(dir_) / "prosody.tsv"))
    types.push_back("prosody_records");
  for (const auto &entry : fs::directory_iterator(fs::path(dir_) / "clips")) {
    (void)entry;
    types.push_back("raw_clips");
    break;
  }
  return types;
}

std::vector<AuditRecord> persist_decision(const PipelineDecision &decision,
                                          const AudioClip &clip,
                                          const PrivacySettings &settings,
                                          ArtifactStore &store,
                                          AuditLog &audit, int64_t timestamp) {
  std::vector<AuditRecord> records;
  auto note = [&](AuditAction action) {
    AuditRecord rec{timestamp, action, decision.window_id};
    audit.append(rec);
    records.push_back(rec);
  };

  note(AuditAction::kWindowHeard);

  SpeakerSet retained;
  if (decision.sid)
    for (SpeakerId id : decision.sid->speakers)
      if (settings.registered.count(id)) retained.insert(id);

  if (decision.stage == Stage::kScored && !retained.empty()) {
    store.put_features(decision.window_id, timestamp,
                       extract_prosody(clip));
    note(AuditAction::kFeaturesPersisted);
    if (settings.retention == PrivacySettings::Retention::kRawClips) {
      store.put_clip(decision.window_id, clip);
      note(AuditAction::kRawPersisted);
    }
  } else if (decision.vad && decision.vad->is_speech) {
    // Speech, but nobody registered: nothing but the audit trail.
    note(AuditAction::kWindowDiscardedUnregistered);
  }
  return records;
}

AuditBundle export_audit(const ArtifactStore &store, int64_t range_begin,
                         int64_t range_end, double bin_seconds) {
  if (range_end < range_begin)
    throw Error("BadRange", "audit range end before begin");
  AuditBundle bundle;
  for (const auto &w : store.list()) {
    if (w.timestamp < range_begin || w.timestamp >= range_end) continue;
    bundle.timestamps.emplace_back(w.window_id, w.timestamp);
    if (w.has_clip) {
      AudioClip clip = load_wav(store.clip_path(w.window_id));
      const size_t bin =
          static_cast<size_t>(std::lround(bin_seconds * clip.sample_rate));
      size_t idx = 0;
      for (size_t start = 0; start < clip.samples.size(); start += bin) {
        size_t len = std::min(bin, clip.samples.size() - start);
        double acc = 0.0;
        for (size_t i = start; i < start + len; ++i)
          acc += static_cast<double>(clip.samples[i]) * clip.samples[i];
        bundle.envelope.push_back(
            {w.window_id, static_cast<int>(idx++),
             std::sqrt(acc / static_cast<double>(len)), false});
      }
    } else {
      // Prosody-only retention: the envelope degrades to one bin per
      // window, recovered from the stored rms.
      double rms = w.features.rms_dbfs <= kSilenceDbfs
                       ? 0.0
                       : std::pow(10.0, w.features.rms_dbfs / 20.0);
      bundle.envelope.push_back({w.window_id, 0, rms, true});
    }
  }

  std::string types;
  for (const auto &t : store.content_types()) {
    if (!types.empty()) types += ", ";
    types += t;
  }
  if (types.empty()) types = "none";
  bundle.attestation =
      "content types present: " + types +
      "\ntranscript content types: none\n"
      "no transcription artifact exists in this store; the content "
      "types above are the complete vocabulary the store can hold\n";
  return bundle;
}

void write_audit_bundle(const AuditBundle &bundle, const std::string &dir) {
  fs::create_directories(dir);
  {
    std::ofstream out(fs::path(dir) / "timestamps.csv", std::ios::trunc);
    if (!out) throw Error("IoFailure", "cannot write timestamps.csv");
    out << "window_id,timestamp\n";
    for (const auto &[id, ts] : bundle.timestamps) out << id << ',' << ts << '\n';
  }
  {
    std::ofstream out(fs::path(dir) / "envelope.csv", std::ios::trunc);
    if (!out) throw Error("IoFailure", "cannot write envelope.csv");
    out << "window_id,bin_index,rms,coarse\n";
    for (const auto &row : bundle.envelope)
      out << row.window_id << ',' << row.bin_index << ',' << format_g6(row.rms)
          << ',' << (row.coarse ? 1 : 0) << '\n';
  }
  {
    std::ofstream out(fs::path(dir) / "attestation.txt", std::ios::trunc);
    if (!out) throw Error("IoFailure", "cannot write attestation.txt");
    out << bundle.attestation;
  }
}

ReplayStats replay_with_privacy(
    const std::vector<StreamWindow> &windows,
    const std::function<PrivacySettings()> &settings_provider,
    const DetectorSet &detectors, const SpeakerSet &enrolled,
    ArtifactStore &store, AuditLog &audit,
    const std::function<void(const PipelineDecision &)> &sink) {
  ReplayStats stats;
  std::optional<PrivacySettings> previous;
  bool was_listening = true;
  for (const auto &w : windows) {
    const int64_t ts = static_cast<int64_t>(w.timestamp_s);
    // Snapshot at the window boundary; mid-window changes never apply.
    PrivacySettings settings = settings_provider();
    if (previous && !(settings == *previous))
      audit.append({ts, AuditAction::kSettingsChanged, ""});
    previous = settings;

    LocalTime now{static_cast<int>((ts / 60) % (24 * 60))};
    const bool listening = gate_listen(now, settings);
    if (!listening) {
      if (was_listening) audit.append({ts, AuditAction::kGatedOff, ""});
      was_listening = false;
      ++stats.windows_gated_off;
      continue;  // off means off: not processed, not heard, not stored
    }
    was_listening = true;

    PipelineDecision d =
        process_window(w.clip, detectors, enrolled, w.window_id, w.timestamp_s);
    ++stats.summary.windows_in;
    switch (d.stage) {
      case Stage::kDiscardedVad: ++stats.summary.discarded_vad; break;
      case Stage::kDiscardedSid: ++stats.summary.discarded_sid; break;
      case Stage::kScored: ++stats.summary.scored; break;
      case Stage::kFailed: ++stats.summary.failed; break;
    }
    persist_decision(d, w.clip, settings, store, audit, ts);
    if (sink) sink(d);
  }
  return stats;
}

}  // namespace homevox
