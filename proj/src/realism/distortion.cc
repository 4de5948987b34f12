// src/realism/distortion.cc

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

#include "homevox/realism/distortion.h"

#include <cmath>

#include "homevox/dsp/kernels.h"
#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

namespace {

// Uniform draw rounded to its manifest form; redrawn until the rounded
// value still satisfies the bound predicate.
double draw_rounded(Rng &rng, double lo, double hi, bool open) {
  for (;;) {
    double v = parse_double(format_g6(rng.uniform(lo, hi)), "draw");
    if (open ? (v > lo && v < hi) : (v >= lo && v <= hi)) return v;
  }
}

}  // namespace

std::vector<std::string> DistortionSpec::to_fields() const {
  std::vector<std::string> f(7, "-");
  if (gain_db) f[0] = format_g6(*gain_db);
  if (noise) {
    f[1] = noise->entry_id;
    f[2] = format_g6(noise->offset_s);
  }
  if (reverb) {
    f[3] = format_g6(reverb->r);
    f[4] = format_g6(reverb->d);
    f[5] = format_g6(reverb->f);
  }
  f[6] = std::to_string(seed);
  return f;
}

DistortionSpec DistortionSpec::from_fields(
    const std::vector<std::string> &fields) {
  if (fields.size() != 7)
    throw Error("ParseError", "distortion spec needs 7 fields");
  DistortionSpec spec;
  if (fields[0] != "-") spec.gain_db = parse_double(fields[0], "gain_db");
  if (fields[1] != "-") {
    NoiseRef ref;
    ref.entry_id = fields[1];
    ref.offset_s = parse_double(fields[2], "noise_offset_s");
    spec.noise = ref;
  }
  if (fields[3] != "-") {
    ReverbParams p;
    p.r = parse_double(fields[3], "reverb_r");
    p.d = parse_double(fields[4], "reverb_d");
    p.f = parse_double(fields[5], "reverb_f");
    spec.reverb = p;
  }
  spec.seed = parse_u64(fields[6], "spec_seed");
  return spec;
}

AudioClip deamplify(const AudioClip &clip, double m_db) {
  if (!(m_db > kDeampMinDb && m_db < kDeampMaxDb))
    throw Error("OutOfRangeM", "deamplification m must be in (0, 12) dB, got " +
                                   format_g6(m_db));
  return apply_gain_db(clip, -m_db);
}

AudioClip overlay_noise(const AudioClip &clip, const AudioClip &noise,
                        double offset_s) {
  if (clip.sample_rate != noise.sample_rate)
    throw Error("RateMismatch",
                "clip at " + std::to_string(clip.sample_rate) + " Hz, noise at " +
                    std::to_string(noise.sample_rate) + " Hz");
  const size_t n = clip.samples.size();
  const long offset = std::lround(offset_s * clip.sample_rate);
  if (offset < 0 || static_cast<size_t>(offset) + n > noise.samples.size())
    throw Error("SegmentOutOfBounds",
                "noise segment [" + format_g6(offset_s) + ", +" +
                    format_g6(clip.duration_seconds()) +
                    " s) outside the noise clip");
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.id = clip.id;
  out.samples.resize(n);
  std::span<const float> segment(noise.samples.data() + offset, n);
  kernels::mix_clamp(clip.span(), segment, out.samples);
  return out;
}

DistortionSpec sample_distortion(uint64_t rng_seed,
                                 const NoiseCatalog &catalog, Condition kind,
                                 double window_seconds) {
  DistortionSpec spec;
  spec.seed = rng_seed;
  if (kind == Condition::kClean) return spec;
  if (kind == Condition::kField)
    throw Error("BadCondition", "field samples are recorded, not synthesized");

  Rng rng(rng_seed);
  const bool wants_deamp_noise =
      kind == Condition::kDeampNoise || kind == Condition::kAllThree;
  const bool wants_reverb =
      kind == Condition::kReverb || kind == Condition::kAllThree;

  if (wants_deamp_noise) {
    if (catalog.empty())
      throw Error("EmptyCatalog", "noise-bearing condition needs entries");
    spec.gain_db = -draw_rounded(rng, kDeampMinDb, kDeampMaxDb, true);
    const auto &entries = catalog.entries();
    const auto &entry = entries[rng.uniform_index(entries.size())];
    NoiseRef ref;
    ref.entry_id = entry.clip_id;
    double max_offset = entry.duration_s - window_seconds;
    ref.offset_s = max_offset <= 0.0
                       ? 0.0
                       : draw_rounded(rng, 0.0, max_offset, false);
    spec.noise = ref;
  }
  if (wants_reverb) {
    ReverbParams p;
    p.r = draw_rounded(rng, 0.0, 1.0, false);
    p.d = draw_rounded(rng, 0.0, 1.0, false);
    p.f = draw_rounded(rng, 0.0, kDecayMax, false);
    spec.reverb = p;
  }
  return spec;
}

AudioClip compose_distortion(const AudioClip &clip, const DistortionSpec &spec,
                             const NoiseCatalog &catalog) {
  AudioClip out = clip;
  if (spec.gain_db) out = deamplify(out, -*spec.gain_db);
  if (spec.noise) {
    AudioClip noise = catalog.load_clip(spec.noise->entry_id);
    out = overlay_noise(out, noise, spec.noise->offset_s);
  }
  if (spec.reverb) out = reverberate(out, *spec.reverb);
  return out;
}

}  // namespace homevox
