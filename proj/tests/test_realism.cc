// tests/test_realism.cc

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

#include "doctest.h"

#include <cmath>
#include <fstream>

#include "fixtures.h"
#include "homevox/realism/distortion.h"
#include "homevox/realism/protocol.h"
#include "homevox/realism/reverb.h"
#include "homevox/util/error.h"

using namespace homevox;
using testing::TempDir;

TEST_CASE("deamplify by 6.0206 dB halves amplitudes") {
  AudioClip clip = testing::random_clip(30, 0.5);
  AudioClip out = deamplify(clip, 6.0206);
  for (size_t i = 0; i < clip.samples.size(); ++i)
    REQUIRE(out.samples[i] ==
            doctest::Approx(0.5f * clip.samples[i]).epsilon(1e-6));
}

TEST_CASE("deamplify at the open-interval edge stays near identity") {
  AudioClip clip = testing::random_clip(31, 0.2);
  AudioClip out = deamplify(clip, 1e-6);
  for (size_t i = 0; i < clip.samples.size(); ++i)
    REQUIRE(std::abs(out.samples[i] - clip.samples[i]) < 1e-6f);
}

TEST_CASE("deamplify drops rms by m, rms recomputed directly") {
  AudioClip clip = testing::random_clip(32, 3.0);
  AudioClip out = deamplify(clip, 11.9);
  double acc = 0.0;
  for (float s : out.samples) acc += static_cast<double>(s) * s;
  double oracle = 10.0 * std::log10(acc / out.samples.size());
  CHECK(oracle == doctest::Approx(rms_dbfs(clip) - 11.9).epsilon(1e-3));
}

TEST_CASE("deamplify rejects m outside (0,12)") {
  AudioClip clip = testing::random_clip(33, 0.1);
  CHECK_THROWS_AS(deamplify(clip, 0.0), Error);
  CHECK_THROWS_AS(deamplify(clip, 12.0), Error);
  CHECK_THROWS_AS(deamplify(clip, -1.0), Error);
}

TEST_CASE("overlay with zeros is the identity, both ways") {
  AudioClip clip = testing::random_clip(34, 1.0);
  AudioClip zeros = synth::silence(3.0);
  AudioClip out = overlay_noise(clip, zeros, 0.5);
  CHECK(out.samples == clip.samples);

  AudioClip quiet = synth::silence(1.0);
  AudioClip noise = testing::random_clip(35, 3.0);
  AudioClip picked = overlay_noise(quiet, noise, 1.0);
  for (size_t i = 0; i < picked.samples.size(); ++i)
    REQUIRE(picked.samples[i] == noise.samples[16000 + i]);
}

TEST_CASE("overlay is element-wise clamped addition") {
  AudioClip a = testing::random_clip(36, 1.0, 0.8);
  AudioClip b = testing::random_clip(37, 2.0, 0.8);
  AudioClip out = overlay_noise(a, b, 0.25);
  const size_t off = 4000;
  for (size_t i = 0; i < a.samples.size(); ++i) {
    float expect = a.samples[i] + b.samples[off + i];
    if (expect > 1.0f) expect = 1.0f;
    if (expect < -1.0f) expect = -1.0f;
    REQUIRE(out.samples[i] == expect);
  }
}

TEST_CASE("overlay checks rate and bounds") {
  AudioClip a = testing::random_clip(38, 1.0);
  AudioClip b = testing::random_clip(39, 2.0);
  b.sample_rate = 8000;
  try {
    overlay_noise(a, b, 0.0);
    FAIL("expected RateMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == "RateMismatch");
  }
  AudioClip c = testing::random_clip(40, 2.0);
  try {
    overlay_noise(a, c, 1.5);  // 1.5 + 1.0 > 2.0
    FAIL("expected SegmentOutOfBounds");
  } catch (const Error &e) {
    CHECK(e.code() == "SegmentOutOfBounds");
  }
}

TEST_CASE("reverb with r=0 is bit-for-bit identity") {
  AudioClip clip = testing::random_clip(41, 2.0);
  AudioClip out = reverberate(clip, ReverbParams{0.0, 0.7, 0.5});
  CHECK(out.samples == clip.samples);
}

TEST_CASE("impulse response decays: second half quieter than first") {
  AudioClip impulse = synth::silence(2.0);
  impulse.samples[0] = 1.0f;
  AudioClip out = reverberate(impulse, ReverbParams{1.0, 0.5, 0.5});
  const size_t half = out.samples.size() / 2;
  double first = 0.0, second = 0.0;
  for (size_t i = 0; i < half; ++i)
    first += static_cast<double>(out.samples[i]) * out.samples[i];
  for (size_t i = half; i < out.samples.size(); ++i)
    second += static_cast<double>(out.samples[i]) * out.samples[i];
  CHECK(second < first);
  CHECK(first > 0.0);
}

TEST_CASE("f=0, d=0, r=1 reduces to four delayed copies") {
  AudioClip clip = testing::random_clip(42, 1.0, 0.5);
  AudioClip out = reverberate(clip, ReverbParams{1.0, 0.0, 0.0});
  // Explicit delay-and-sum oracle: comb delays plus both all-pass
  // delays, which at d=0 are pure delays in series.
  const int rate = clip.sample_rate;
  auto samples_of = [&](double ms) {
    int d = static_cast<int>(std::lround(ms * rate / 1000.0));
    return d < 1 ? 1 : d;
  };
  int ap = samples_of(kAllpassDelaysMs[0]) + samples_of(kAllpassDelaysMs[1]);
  for (size_t i = 0; i < out.samples.size(); ++i) {
    float expect = 0.0f;
    for (double ms : kCombDelaysMs) {
      size_t d = static_cast<size_t>(samples_of(ms) + ap);
      if (i >= d) expect += clip.samples[i - d];
    }
    expect *= kCombBankScale;
    REQUIRE(out.samples[i] == doctest::Approx(expect).epsilon(1e-5));
  }
}

TEST_CASE("reverb output stays finite and in range for random params") {
  Rng rng(4242);
  AudioClip clip = testing::random_clip(43, 1.0, 0.9);
  for (int trial = 0; trial < 25; ++trial) {
    ReverbParams p{rng.uniform(), rng.uniform(), rng.uniform(0.0, 0.95)};
    AudioClip out = reverberate(clip, p);
    REQUIRE(out.samples.size() == clip.samples.size());
    for (float s : out.samples) {
      REQUIRE(std::isfinite(s));
      REQUIRE(s <= 1.0f);
      REQUIRE(s >= -1.0f);
    }
  }
}

TEST_CASE("sample_distortion: clean draws nothing") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  DistortionSpec spec = sample_distortion(5, catalog, Condition::kClean);
  CHECK(spec.is_clean());
}

TEST_CASE("sample_distortion is deterministic in the seed") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  auto a = sample_distortion(99, catalog, Condition::kAllThree);
  auto b = sample_distortion(99, catalog, Condition::kAllThree);
  CHECK(a.to_fields() == b.to_fields());
  auto c = sample_distortion(100, catalog, Condition::kAllThree);
  CHECK(a.to_fields() != c.to_fields());
}

TEST_CASE("m draws are uniform on (0,12): Monte-Carlo oracle") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  double sum = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    auto spec = sample_distortion(mix_seed(1234, i), catalog,
                                  Condition::kDeampNoise);
    REQUIRE(spec.gain_db.has_value());
    double m = -*spec.gain_db;
    REQUIRE(m > 0.0);
    REQUIRE(m < 12.0);
    sum += m;
  }
  CHECK(sum / n == doctest::Approx(6.0).epsilon(0.2 / 6.0));
}

TEST_CASE("reverb params draw inside their ranges") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  for (int i = 0; i < 200; ++i) {
    auto spec = sample_distortion(mix_seed(77, i), catalog, Condition::kReverb);
    REQUIRE(spec.reverb.has_value());
    REQUIRE(!spec.gain_db.has_value());
    REQUIRE(!spec.noise.has_value());
    REQUIRE(spec.reverb->r >= 0.0);
    REQUIRE(spec.reverb->r <= 1.0);
    REQUIRE(spec.reverb->d >= 0.0);
    REQUIRE(spec.reverb->d <= 1.0);
    REQUIRE(spec.reverb->f >= 0.0);
    REQUIRE(spec.reverb->f <= kDecayMax);
  }
}

TEST_CASE("empty catalog rejects noise-bearing kinds") {
  NoiseCatalog empty;
  try {
    sample_distortion(1, empty, Condition::kDeampNoise);
    FAIL("expected EmptyCatalog");
  } catch (const Error &e) {
    CHECK(e.code() == "EmptyCatalog");
  }
}

TEST_CASE("compose: gain-only spec halves the clip; clean is identity") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  AudioClip clip = testing::random_clip(44, 5.0);

  DistortionSpec gain_only;
  gain_only.gain_db = -6.0206;
  AudioClip halved = compose_distortion(clip, gain_only, catalog);
  for (size_t i = 0; i < clip.samples.size(); ++i)
    REQUIRE(halved.samples[i] ==
            doctest::Approx(0.5f * clip.samples[i]).epsilon(1e-6));

  DistortionSpec clean;
  AudioClip same = compose_distortion(clip, clean, catalog);
  CHECK(same.samples == clip.samples);
}

TEST_CASE("compose applied twice from one spec is byte-identical") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  AudioClip clip = testing::random_clip(45, 5.0);
  auto spec = sample_distortion(2024, catalog, Condition::kAllThree);
  AudioClip a = compose_distortion(clip, spec, catalog);
  AudioClip b = compose_distortion(clip, spec, catalog);
  CHECK(a.samples == b.samples);
}

TEST_CASE("spec round-trips through its manifest fields") {
  TempDir dir("cat");
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  auto spec = sample_distortion(321, catalog, Condition::kAllThree);
  auto back = DistortionSpec::from_fields(spec.to_fields());
  CHECK(back.to_fields() == spec.to_fields());
  // Draw-time rounding makes the reparsed spec compose identically.
  AudioClip clip = testing::random_clip(46, 5.0);
  CHECK(compose_distortion(clip, back, catalog).samples ==
        compose_distortion(clip, spec, catalog).samples);
}

TEST_CASE("protocol dataset: 60 clean inputs make 240 samples, 60 each") {
  TempDir dir("proto");
  auto labels = load_label_manifest(testing::write_clean_windows(dir));
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  auto ds = build_protocol_dataset(labels, catalog, 7);
  CHECK(ds.total() == 240);
  for (Condition c : protocol_conditions())
    CHECK(ds.conditions.at(c).size() == 60);
}

TEST_CASE("distortion never changes a label") {
  TempDir dir("proto");
  auto labels = load_label_manifest(testing::write_clean_windows(dir, 6));
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  auto ds = build_protocol_dataset(labels, catalog, 11);
  for (size_t i = 0; i < labels.size(); ++i) {
    for (Condition c : protocol_conditions()) {
      const auto &entry = ds.conditions.at(c)[i];
      CHECK(entry.sample.is_speech == labels[i].is_speech);
      CHECK(entry.sample.speakers == labels[i].speakers);
      CHECK(entry.sample.angry == labels[i].angry);
      CHECK(entry.sample.conflict == labels[i].conflict);
      CHECK(entry.sample.home_id == labels[i].home_id);
      CHECK(entry.sample.condition == c);
    }
  }
  // One clean input yields 4 samples.
  auto one = build_protocol_dataset({labels[0]}, catalog, 3);
  CHECK(one.total() == 4);
}

TEST_CASE("deamp+noise and all-three share draws; reverb matches too") {
  TempDir dir("proto");
  auto labels = load_label_manifest(testing::write_clean_windows(dir, 4));
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));
  auto ds = build_protocol_dataset(labels, catalog, 19);
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto &dn = ds.conditions.at(Condition::kDeampNoise)[i].spec;
    const auto &rv = ds.conditions.at(Condition::kReverb)[i].spec;
    const auto &all = ds.conditions.at(Condition::kAllThree)[i].spec;
    REQUIRE(dn);
    REQUIRE(rv);
    REQUIRE(all);
    CHECK(dn->gain_db == all->gain_db);
    CHECK(dn->noise->entry_id == all->noise->entry_id);
    CHECK(dn->noise->offset_s == all->noise->offset_s);
    CHECK(rv->reverb->r == all->reverb->r);
    CHECK(rv->reverb->d == all->reverb->d);
    CHECK(rv->reverb->f == all->reverb->f);
  }
}

TEST_CASE("materialized protocol is byte-identical across runs") {
  TempDir dir("proto");
  auto labels = load_label_manifest(testing::write_clean_windows(dir, 8));
  auto catalog = NoiseCatalog::load(testing::write_noise_catalog(dir));

  TempDir out1("proto-out1"), out2("proto-out2");
  auto ds1 = build_protocol_dataset(labels, catalog, 55);
  auto ds2 = build_protocol_dataset(labels, catalog, 55);
  std::string m1 = materialize_protocol_dataset(ds1, catalog, out1.str());
  std::string m2 = materialize_protocol_dataset(ds2, catalog, out2.str());

  auto slurp = [](const std::string &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  CHECK(slurp(m1) == slurp(m2));

  auto entries = load_protocol_manifest(m1);
  REQUIRE(entries.size() == 32);
  // Every rendered WAV must exist and reload.
  for (const auto &e : entries) {
    AudioClip c = load_wav(e.sample.path);
    CHECK(c.samples.size() == 80000);
  }
  for (const auto &e : entries) {
    std::string rel = condition_name(e.sample.condition) + "/" +
                      e.sample.sample_id + ".wav";
    REQUIRE(slurp(out1.str() + "/" + rel) == slurp(out2.str() + "/" + rel));
  }
}

TEST_CASE("noise catalog validates tags and durations") {
  TempDir dir("cat");
  std::string index = dir.file("idx.tsv");
  save_wav(synth::white_noise(0.05, 6.0, 1), dir.file("n.wav"));
  {
    std::ofstream out(index);
    out << "n0\tspaceship\tn.wav\t6\n";
  }
  CHECK_THROWS_AS(NoiseCatalog::load(index), Error);
  {
    std::ofstream out(index, std::ios::trunc);
    out << "n0\tdishes\tn.wav\t3.5\n";
  }
  CHECK_THROWS_AS(NoiseCatalog::load(index), Error);
  {
    std::ofstream out(index, std::ios::trunc);
    out << "n0\tdishes\tn.wav\t6\n";
  }
  auto catalog = NoiseCatalog::load(index);
  CHECK(catalog.entries().size() == 1);
  CHECK(catalog.load_clip("n0").samples.size() == 96000);
}
