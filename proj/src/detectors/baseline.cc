// src/detectors/baseline.cc

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

#include "homevox/detectors/baseline.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "homevox/audio/clip.h"
#include "homevox/util/error.h"
#include "homevox/util/record.h"
#include "homevox/util/rng.h"

namespace homevox {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double mean_of(const std::vector<float> &v) {
  if (v.empty()) return 0.0;
  double acc = 0.0;
  for (float x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

double variance_of(const std::vector<float> &v) {
  if (v.size() < 2) return 0.0;
  double m = mean_of(v);
  double acc = 0.0;
  for (float x : v) acc += (x - m) * (x - m);
  return acc / static_cast<double>(v.size());
}

double frame_dbfs(float rms) {
  if (rms <= 0.0f) return kSilenceDbfs;
  return 20.0 * std::log10(static_cast<double>(rms));
}

}  // namespace

VadVerdict energy_zcr_vad(const AudioClip &clip, const FeatureConfig &cfg) {
  WindowFeatures f = extract_features(clip, cfg);
  VadVerdict v;
  if (f.frame_rms.empty()) return v;

  float peak = 0.0f;
  for (float r : f.frame_rms) peak = std::max(peak, r);
  const double gate =
      std::max(cfg.vad_energy_floor,
               cfg.vad_energy_gate_ratio * static_cast<double>(peak));

  size_t active = 0;
  double zcr_sum = 0.0;
  for (size_t i = 0; i < f.frame_rms.size(); ++i) {
    if (f.frame_rms[i] >= gate) {
      ++active;
      zcr_sum += f.frame_zcr[i];
    }
  }
  const double fraction =
      static_cast<double>(active) / static_cast<double>(f.frame_rms.size());
  v.score = fraction;
  if (active == 0) return v;
  const double zcr_mean = zcr_sum / static_cast<double>(active);
  v.is_speech = fraction >= cfg.vad_speech_fraction &&
                zcr_mean >= cfg.vad_zcr_min && zcr_mean <= cfg.vad_zcr_max;
  return v;
}

SpeakerProfile enroll(const std::vector<AudioClip> &windows, SpeakerId identity,
                      const FeatureConfig &cfg) {
  if (windows.empty())
    throw Error("EmptyEnrollment", "at least one enrollment window required");
  SpeakerProfile p;
  p.identity = identity;
  p.enrollment_count = static_cast<int>(windows.size());
  p.centroid.assign(cfg.n_cepstra, 0.0f);
  for (const auto &w : windows) {
    auto feat = cepstral_mean(w, cfg);
    for (int c = 0; c < cfg.n_cepstra; ++c) p.centroid[c] += feat[c];
  }
  for (auto &c : p.centroid) c /= static_cast<float>(windows.size());
  return p;
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size())
    throw Error("DimensionMismatch", "feature dimensions differ");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

namespace {

SidVerdict sid_from_features(const std::vector<float> &features,
                             const std::vector<SpeakerProfile> &profiles,
                             double tau) {
  if (profiles.empty())
    throw Error("EmptyProfiles", "speaker identification needs profiles");
  SidVerdict v;
  for (const auto &p : profiles) {
    double sim = cosine_similarity(features, p.centroid);
    v.scores[p.identity] = (sim + 1.0) / 2.0;
    if (sim >= tau) v.speakers.insert(p.identity);
  }
  return v;
}

}  // namespace

SidVerdict cosine_sid(const AudioClip &clip,
                      const std::vector<SpeakerProfile> &profiles, double tau,
                      const FeatureConfig &cfg) {
  return sid_from_features(cepstral_mean(clip, cfg), profiles, tau);
}

EmotionVerdict prosody_emotion(const AudioClip &clip,
                               const FeatureConfig &cfg) {
  WindowFeatures f = extract_features(clip, cfg);
  EmotionVerdict v;

  double level = kSilenceDbfs;
  if (!clip.samples.empty()) level = rms_dbfs(clip);

  std::vector<float> voiced;
  for (float p : f.frame_pitch)
    if (p > 0.0f) voiced.push_back(p);
  const double pitch_var = variance_of(voiced);

  // Margins are normalized so 0 sits exactly on each gate; the score is
  // the logistic of the weaker margin and crosses 0.5 at the decision
  // boundary.
  const double loud_margin = (level - cfg.emotion_loud_dbfs) / 6.0;
  const double var_margin =
      (std::log1p(pitch_var) - std::log1p(cfg.emotion_pitch_var)) /
      std::log(4.0);
  v.angry = loud_margin > 0.0 && var_margin > 0.0;
  v.score = logistic(std::min(loud_margin, var_margin));
  return v;
}

ConflictVerdict conflict_heuristic(const AudioClip &clip,
                                   const FeatureConfig &cfg) {
  WindowFeatures f = extract_features(clip, cfg);
  ConflictVerdict v;
  if (f.frame_rms.empty()) return v;

  size_t raised = 0;
  for (float r : f.frame_rms)
    if (frame_dbfs(r) > cfg.conflict_frame_dbfs) ++raised;
  const double ratio =
      static_cast<double>(raised) / static_cast<double>(f.frame_rms.size());

  const double m = mean_of(f.frame_rms);
  const double norm_var =
      m > 0.0 ? variance_of(f.frame_rms) / (m * m) : 0.0;

  const double ratio_margin =
      (ratio - cfg.conflict_raised_fraction) / 0.25;
  const double var_margin =
      (std::log1p(norm_var) - std::log1p(cfg.conflict_energy_var)) /
      std::log(4.0);
  v.in_conflict = ratio_margin > 0.0 && var_margin > 0.0;
  v.score = logistic(std::min(ratio_margin, var_margin));
  return v;
}

std::vector<float> degraded_features(const AudioClip &clip,
                                     const DegradedSidConfig &cfg) {
  // Fixed Gaussian projection of the window head; regenerated from the
  // seed on every call so enrollment and scoring always agree.
  Rng rng(cfg.seed);
  std::vector<float> out(cfg.dim, 0.0f);
  const size_t n = std::min(cfg.input_len, clip.samples.size());
  for (int j = 0; j < cfg.dim; ++j) {
    double acc = 0.0;
    for (size_t i = 0; i < cfg.input_len; ++i) {
      // Box-Muller from two deterministic uniforms.
      double u1 = rng.uniform();
      double u2 = rng.uniform();
      double g = std::sqrt(-2.0 * std::log(u1 + 1e-300)) *
                 std::cos(2.0 * 3.14159265358979323846 * u2);
      if (i < n) acc += g * clip.samples[i];
    }
    out[j] = static_cast<float>(acc);
  }
  return out;
}

SpeakerProfile enroll_degraded(const std::vector<AudioClip> &windows,
                               SpeakerId identity,
                               const DegradedSidConfig &cfg) {
  if (windows.empty())
    throw Error("EmptyEnrollment", "at least one enrollment window required");
  SpeakerProfile p;
  p.identity = identity;
  p.enrollment_count = static_cast<int>(windows.size());
  p.centroid.assign(cfg.dim, 0.0f);
  for (const auto &w : windows) {
    auto feat = degraded_features(w, cfg);
    for (int c = 0; c < cfg.dim; ++c) p.centroid[c] += feat[c];
  }
  for (auto &c : p.centroid) c /= static_cast<float>(windows.size());
  return p;
}

SidVerdict degraded_sid(const AudioClip &clip,
                        const std::vector<SpeakerProfile> &profiles, double tau,
                        const DegradedSidConfig &cfg) {
  return sid_from_features(degraded_features(clip, cfg), profiles, tau);
}

void save_profiles(const ProfileFile &file, const std::string &path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("IoFailure", "cannot write " + path);
  out << "# features: " << file.kind;
  if (file.kind == "randproj") out << " seed=" << file.seed;
  out << "\n";
  for (const auto &p : file.profiles) {
    std::string coeffs;
    for (size_t i = 0; i < p.centroid.size(); ++i) {
      if (i > 0) coeffs += ' ';
      coeffs += format_g9(p.centroid[i]);
    }
    out << join_fields({speaker_name(p.identity),
                        std::to_string(p.enrollment_count), coeffs})
        << "\n";
  }
}

ProfileFile load_profiles(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("IoFailure", "cannot open " + path);
  ProfileFile file;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (first && line.rfind("# features: ", 0) == 0) {
        std::istringstream hdr(line.substr(12));
        hdr >> file.kind;
        std::string tok;
        while (hdr >> tok)
          if (tok.rfind("seed=", 0) == 0)
            file.seed = static_cast<uint64_t>(
                parse_u64(tok.substr(5), "profile seed"));
      }
      first = false;
      continue;
    }
    first = false;
    auto fields = split_fields(line);
    if (fields.size() != 3)
      throw Error("ParseError", path + ": profile rows need 3 fields");
    SpeakerProfile p;
    p.identity = parse_speaker(fields[0]);
    p.enrollment_count = static_cast<int>(parse_long(fields[1], "count"));
    std::istringstream coeffs(fields[2]);
    std::string num;
    while (coeffs >> num)
      p.centroid.push_back(static_cast<float>(parse_double(num, "coeff")));
    file.profiles.push_back(std::move(p));
  }
  return file;
}

}  // namespace homevox
