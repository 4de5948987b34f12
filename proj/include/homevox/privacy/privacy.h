// homevox/privacy/privacy.h

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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homevox/audio/clip.h"
#include "homevox/detectors/features.h"
#include "homevox/pipeline/pipeline.h"

namespace homevox {

// Minutes since local midnight, parsed from "HH:MM".
struct LocalTime {
  int minutes = 0;

  static LocalTime parse(const std::string &text);
  std::string str() const;

  bool operator==(const LocalTime &) const = default;
};

struct PrivacySettings {
  LocalTime day_start{8 * 60};
  LocalTime day_end{20 * 60};
  bool enabled = true;
  enum class Retention { kProsodyOnly, kRawClips };
  Retention retention = Retention::kProsodyOnly;
  SpeakerSet registered;  // identities whose windows may persist

  bool operator==(const PrivacySettings &) const = default;

  // Throws Error("BadSettings") when day_start == day_end.
  static PrivacySettings load(const std::string &path);
  void save(const std::string &path) const;
};

// listen iff enabled and now falls inside [day_start, day_end); windows
// with day_start > day_end wrap across midnight.
bool gate_listen(LocalTime now, const PrivacySettings &settings);

// The only per-window statistics that may outlive the window in
// prosody-only mode. Fixed, clip-length-independent field set; the
// waveform cannot be reconstructed from them.
struct ProsodyFeatures {
  double pitch_mean_hz = 0.0;
  double pitch_var_hz2 = 0.0;
  double rms_dbfs = kSilenceDbfs;
  double energy_var = 0.0;       // normalized frame-energy variance
  int energy_peak_count = 0;     // envelope peaks, a speech-rate proxy
};

ProsodyFeatures extract_prosody(const AudioClip &clip,
                                const FeatureConfig &cfg = {});

enum class AuditAction {
  kWindowHeard,
  kWindowDiscardedUnregistered,
  kFeaturesPersisted,
  kRawPersisted,
  kGatedOff,
  kSettingsChanged,
};

std::string audit_action_name(AuditAction action);

struct AuditRecord {
  int64_t timestamp = 0;
  AuditAction action = AuditAction::kWindowHeard;
  std::string window_id;  // empty when not window-scoped
};

// Append-only, single writer. Timestamps must be non-decreasing.
class AuditLog {
 public:
  explicit AuditLog(const std::string &path);
  void append(const AuditRecord &record);
  static std::vector<AuditRecord> load(const std::string &path);

 private:
  std::string path_;
  int64_t last_timestamp_;
};

// Directory store: prosody.tsv plus clips/<window_id>.wav in raw mode.
class ArtifactStore {
 public:
  explicit ArtifactStore(const std::string &dir);

  // Returns the bytes appended; the bound the prosody-only invariant
  // tests against.
  size_t put_features(const std::string &window_id, int64_t timestamp,
                      const ProsodyFeatures &features);
  void put_clip(const std::string &window_id, const AudioClip &clip);

  struct StoredWindow {
    std::string window_id;
    int64_t timestamp = 0;
    ProsodyFeatures features;
    bool has_clip = false;
  };
  std::vector<StoredWindow> list() const;

  // The closed vocabulary the transcript-absence attestation enumerates.
  std::vector<std::string> content_types() const;

  const std::string &dir() const { return dir_; }
  std::string clip_path(const std::string &window_id) const;

 private:
  std::string dir_;
};

// Applies the retention rules to one captured window and audits every
// action taken. Returns the records it appended.
std::vector<AuditRecord> persist_decision(const PipelineDecision &decision,
                                          const AudioClip &clip,
                                          const PrivacySettings &settings,
                                          ArtifactStore &store,
                                          AuditLog &audit, int64_t timestamp);

struct AuditBundle {
  std::vector<std::pair<std::string, int64_t>> timestamps;  // window_id, ts
  struct EnvelopeRow {
    std::string window_id;
    int bin_index = 0;
    double rms = 0.0;
    bool coarse = false;  // true when derived from stored prosody only
  };
  std::vector<EnvelopeRow> envelope;
  std::string attestation;
};

// Everything in the bundle derives from persisted artifacts: timestamps
// from the store, envelopes from raw clips at >= 100 ms bins (or one
// coarse value per window in prosody-only mode), and an attestation
// enumerating the store's content types, none of which is a transcript.
AuditBundle export_audit(const ArtifactStore &store, int64_t range_begin,
                         int64_t range_end, double bin_seconds = 0.1);

void write_audit_bundle(const AuditBundle &bundle, const std::string &dir);

// Replays timestamped windows through the pipeline under the privacy
// gate. The settings snapshot is taken at each window boundary; a
// listen->off transition audits one gated_off record, a snapshot change
// one settings_changed record. Gated-off windows are never processed,
// never audited as heard, and never persisted.
struct ReplayStats {
  RunSummary summary;        // windows that passed the gate
  size_t windows_gated_off = 0;
};

ReplayStats replay_with_privacy(
    const std::vector<StreamWindow> &windows,
    const std::function<PrivacySettings()> &settings_provider,
    const DetectorSet &detectors, const SpeakerSet &enrolled,
    ArtifactStore &store, AuditLog &audit,
    const std::function<void(const PipelineDecision &)> &sink = {});

}  // namespace homevox
