// src/detectors/features.cc

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

#include "homevox/detectors/features.h"

#include <cmath>

#include "homevox/util/kv.h"
#include "homevox/util/record.h"

namespace homevox {

kernels::FrameGrid FeatureConfig::grid(int sample_rate) const {
  kernels::FrameGrid g;
  g.frame_len = static_cast<size_t>(std::lround(frame_ms * sample_rate / 1000.0));
  g.hop = static_cast<size_t>(std::lround(hop_ms * sample_rate / 1000.0));
  return g;
}

int FeatureConfig::lag_min(int sample_rate) const {
  return static_cast<int>(std::lround(sample_rate / pitch_max_hz));
}

int FeatureConfig::lag_max(int sample_rate) const {
  return static_cast<int>(std::lround(sample_rate / pitch_min_hz));
}

FeatureConfig FeatureConfig::load(const std::string &path) {
  KvFile kv = KvFile::load(path);
  FeatureConfig cfg;
  cfg.frame_ms = kv.get_double("frame_ms", cfg.frame_ms);
  cfg.hop_ms = kv.get_double("hop_ms", cfg.hop_ms);
  cfg.n_mels = static_cast<int>(kv.get_long("n_mels", cfg.n_mels));
  cfg.n_cepstra = static_cast<int>(kv.get_long("n_cepstra", cfg.n_cepstra));
  cfg.pitch_min_hz = kv.get_double("pitch_min_hz", cfg.pitch_min_hz);
  cfg.pitch_max_hz = kv.get_double("pitch_max_hz", cfg.pitch_max_hz);
  cfg.voicing_floor = kv.get_double("voicing_floor", cfg.voicing_floor);
  cfg.vad_energy_gate_ratio =
      kv.get_double("vad_energy_gate_ratio", cfg.vad_energy_gate_ratio);
  cfg.vad_energy_floor = kv.get_double("vad_energy_floor", cfg.vad_energy_floor);
  cfg.vad_speech_fraction =
      kv.get_double("vad_speech_fraction", cfg.vad_speech_fraction);
  cfg.vad_zcr_min = kv.get_double("vad_zcr_min", cfg.vad_zcr_min);
  cfg.vad_zcr_max = kv.get_double("vad_zcr_max", cfg.vad_zcr_max);
  cfg.sid_threshold = kv.get_double("sid_threshold", cfg.sid_threshold);
  cfg.emotion_loud_dbfs = kv.get_double("emotion_loud_dbfs", cfg.emotion_loud_dbfs);
  cfg.emotion_pitch_var = kv.get_double("emotion_pitch_var", cfg.emotion_pitch_var);
  cfg.conflict_frame_dbfs =
      kv.get_double("conflict_frame_dbfs", cfg.conflict_frame_dbfs);
  cfg.conflict_raised_fraction =
      kv.get_double("conflict_raised_fraction", cfg.conflict_raised_fraction);
  cfg.conflict_energy_var =
      kv.get_double("conflict_energy_var", cfg.conflict_energy_var);
  return cfg;
}

void FeatureConfig::save(const std::string &path) const {
  KvFile kv;
  kv.set("frame_ms", format_g6(frame_ms));
  kv.set("hop_ms", format_g6(hop_ms));
  kv.set("n_mels", std::to_string(n_mels));
  kv.set("n_cepstra", std::to_string(n_cepstra));
  kv.set("pitch_min_hz", format_g6(pitch_min_hz));
  kv.set("pitch_max_hz", format_g6(pitch_max_hz));
  kv.set("voicing_floor", format_g6(voicing_floor));
  kv.set("vad_energy_gate_ratio", format_g6(vad_energy_gate_ratio));
  kv.set("vad_energy_floor", format_g6(vad_energy_floor));
  kv.set("vad_speech_fraction", format_g6(vad_speech_fraction));
  kv.set("vad_zcr_min", format_g6(vad_zcr_min));
  kv.set("vad_zcr_max", format_g6(vad_zcr_max));
  kv.set("sid_threshold", format_g6(sid_threshold));
  kv.set("emotion_loud_dbfs", format_g6(emotion_loud_dbfs));
  kv.set("emotion_pitch_var", format_g6(emotion_pitch_var));
  kv.set("conflict_frame_dbfs", format_g6(conflict_frame_dbfs));
  kv.set("conflict_raised_fraction", format_g6(conflict_raised_fraction));
  kv.set("conflict_energy_var", format_g6(conflict_energy_var));
  kv.save(path);
}

WindowFeatures extract_features(const AudioClip &clip,
                                const FeatureConfig &cfg) {
  WindowFeatures f;
  const auto grid = cfg.grid(clip.sample_rate);
  const size_t n_frames = grid.count(clip.samples.size());
  f.frame_rms.resize(n_frames);
  f.frame_zcr.resize(n_frames);
  f.frame_pitch.resize(n_frames);
  if (n_frames == 0) {
    f.cepstra_mean.assign(cfg.n_cepstra, 0.0f);
    return f;
  }
  kernels::frame_rms(clip.span(), grid, f.frame_rms);
  kernels::frame_zcr(clip.span(), grid, f.frame_zcr);
  kernels::pitch_frames(clip.span(), grid, clip.sample_rate,
                        cfg.lag_min(clip.sample_rate),
                        cfg.lag_max(clip.sample_rate),
                        static_cast<float>(cfg.voicing_floor), f.frame_pitch);

  std::vector<float> cepstra(n_frames * cfg.n_cepstra);
  kernels::cepstra_frames(clip.span(), grid, clip.sample_rate, cfg.n_mels,
                          cfg.n_cepstra, cepstra);
  f.cepstra_mean.assign(cfg.n_cepstra, 0.0f);
  for (size_t fr = 0; fr < n_frames; ++fr)
    for (int c = 0; c < cfg.n_cepstra; ++c)
      f.cepstra_mean[c] += cepstra[fr * cfg.n_cepstra + c];
  for (int c = 0; c < cfg.n_cepstra; ++c)
    f.cepstra_mean[c] /= static_cast<float>(n_frames);
  return f;
}

std::vector<float> cepstral_mean(const AudioClip &clip,
                                 const FeatureConfig &cfg) {
  return extract_features(clip, cfg).cepstra_mean;
}

}  // namespace homevox
