// tests/test_audio_core.cc

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
#include "homevox/audio/clip.h"
#include "homevox/audio/wav_io.h"
#include "homevox/util/error.h"

using namespace homevox;
using testing::TempDir;

namespace {

std::vector<unsigned char> read_bytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Independent quantization oracle: round-to-nearest 16-bit code.
int16_t quantize16(float s) {
  long q = std::lrint(static_cast<double>(s) * 32768.0);
  if (q > 32767) q = 32767;
  if (q < -32768) q = -32768;
  return static_cast<int16_t>(q);
}

}  // namespace

TEST_CASE("silence loads as zeros") {
  TempDir dir("wav");
  save_wav(synth::silence(1.0), dir.file("z.wav"));
  AudioClip clip = load_wav(dir.file("z.wav"));
  CHECK(clip.sample_rate == 16000);
  REQUIRE(clip.samples.size() == 16000);
  for (float s : clip.samples) REQUIRE(s == 0.0f);
}

TEST_CASE("full-scale 16-bit code maps to 32767/32768") {
  TempDir dir("wav");
  AudioClip clip;
  clip.samples = {1.0f};  // saturates to code 32767 on write
  save_wav(clip, dir.file("full.wav"));
  AudioClip loaded = load_wav(dir.file("full.wav"));
  REQUIRE(loaded.samples.size() == 1);
  CHECK(loaded.samples[0] == doctest::Approx(32767.0 / 32768.0).epsilon(1e-9));
}

TEST_CASE("16-bit round trip is byte-identical") {
  TempDir dir("wav");
  // Random 16-bit PCM generated directly from codes.
  Rng rng(77);
  AudioClip clip;
  clip.samples.resize(16000);
  for (auto &s : clip.samples) {
    int code = static_cast<int>(rng.uniform_index(65536)) - 32768;
    s = static_cast<float>(code) / 32768.0f;
  }
  save_wav(clip, dir.file("a.wav"));
  AudioClip loaded = load_wav(dir.file("a.wav"));
  REQUIRE(loaded.samples.size() == clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i)
    REQUIRE(loaded.samples[i] == clip.samples[i]);

  save_wav(loaded, dir.file("b.wav"));
  CHECK(read_bytes(dir.file("a.wav")) == read_bytes(dir.file("b.wav")));
}

TEST_CASE("save quantization stays within half a code of the oracle") {
  TempDir dir("wav");
  AudioClip clip = testing::random_clip(5, 0.5, 0.999);
  save_wav(clip, dir.file("q.wav"));
  AudioClip loaded = load_wav(dir.file("q.wav"));
  REQUIRE(loaded.samples.size() == clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    CHECK(std::abs(loaded.samples[i] - clip.samples[i]) <= 1.0f / 32768.0f);
    // And the stored code is exactly the oracle's.
    CHECK(loaded.samples[i] ==
          static_cast<float>(quantize16(clip.samples[i])) / 32768.0f);
  }
}

TEST_CASE("loader rejects what it does not speak") {
  TempDir dir("wav");
  SUBCASE("not a RIFF file") {
    std::ofstream out(dir.file("bad.wav"), std::ios::binary);
    out << "this is not audio";
    out.close();
    CHECK_THROWS_WITH_AS(load_wav(dir.file("bad.wav")),
                         doctest::Contains("RIFF"), Error);
  }
  SUBCASE("stereo is unsupported") {
    // Hand-built minimal stereo header.
    std::string bytes;
    auto u32 = [&](uint32_t v) {
      for (int i = 0; i < 4; ++i) bytes.push_back(char((v >> (8 * i)) & 0xff));
    };
    auto u16 = [&](uint16_t v) {
      bytes.push_back(char(v & 0xff));
      bytes.push_back(char(v >> 8));
    };
    bytes += "RIFF"; u32(36); bytes += "WAVE";
    bytes += "fmt "; u32(16); u16(1); u16(2); u32(16000); u32(64000);
    u16(4); u16(16);
    bytes += "data"; u32(0);
    std::ofstream out(dir.file("st.wav"), std::ios::binary);
    out << bytes;
    out.close();
    try {
      load_wav(dir.file("st.wav"));
      FAIL("expected UnsupportedFormat");
    } catch (const Error &e) {
      CHECK(e.code() == "UnsupportedFormat");
    }
  }
}

TEST_CASE("slice_windows drops the partial tail") {
  AudioClip clip = synth::silence(12.0);
  clip.id = "s";
  auto windows = slice_windows(clip, WindowConfig{5.0});
  REQUIRE(windows.size() == 2);
  CHECK(windows[0].samples.size() == 80000);
  CHECK(windows[0].id == "s#0");
  CHECK(windows[1].id == "s#1");
}

TEST_CASE("a window-length clip slices to itself") {
  AudioClip clip = testing::random_clip(3, 5.0);
  auto windows = slice_windows(clip, WindowConfig{5.0});
  REQUIRE(windows.size() == 1);
  CHECK(windows[0].samples == clip.samples);
}

TEST_CASE("windows land on stream order: tone k in window k") {
  // 60 concatenated 5 s tones with distinct frequencies; a zero-crossing
  // count oracle identifies each window's tone without any FFT.
  const int rate = 16000;
  AudioClip stream;
  stream.sample_rate = rate;
  std::vector<double> freqs;
  for (int k = 0; k < 60; ++k) {
    double f = 100.0 + 25.0 * k;
    freqs.push_back(f);
    AudioClip t = synth::tone(f, 0.5, 5.0, rate);
    stream.samples.insert(stream.samples.end(), t.samples.begin(),
                          t.samples.end());
  }
  auto windows = slice_windows(stream, WindowConfig{5.0});
  REQUIRE(windows.size() == 60);
  for (int k = 0; k < 60; ++k) {
    size_t crossings = 0;
    const auto &s = windows[k].samples;
    for (size_t i = 1; i < s.size(); ++i)
      if ((s[i - 1] >= 0.0f) != (s[i] >= 0.0f)) ++crossings;
    // A sine at f crosses zero 2f times per second.
    double estimated = static_cast<double>(crossings) / 2.0 / 5.0;
    REQUIRE(estimated == doctest::Approx(freqs[k]).epsilon(0.01));
  }
}

TEST_CASE("windowing partitions the stream sample-exactly") {
  AudioClip clip = testing::random_clip(9, 13.7);
  auto windows = slice_windows(clip, WindowConfig{5.0});
  std::vector<float> rebuilt;
  for (const auto &w : windows)
    rebuilt.insert(rebuilt.end(), w.samples.begin(), w.samples.end());
  size_t tail = clip.samples.size() - rebuilt.size();
  CHECK(tail < 80000);
  for (size_t i = 0; i < rebuilt.size(); ++i)
    REQUIRE(rebuilt[i] == clip.samples[i]);
}

TEST_CASE("rms_dbfs of a unit square wave is 0") {
  AudioClip clip;
  clip.samples.assign(1000, 1.0f);
  for (size_t i = 1; i < clip.samples.size(); i += 2) clip.samples[i] = -1.0f;
  CHECK(rms_dbfs(clip) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("rms_dbfs of a full-scale sine is -3.0103 dB") {
  AudioClip clip = synth::tone(100.0, 1.0, 1.0);
  CHECK(rms_dbfs(clip) == doctest::Approx(-3.0103).epsilon(1e-3 / 3.0103));
}

TEST_CASE("rms_dbfs silence sentinel and empty error") {
  CHECK(rms_dbfs(synth::silence(0.5)) == kSilenceDbfs);
  AudioClip empty;
  CHECK_THROWS_AS(rms_dbfs(empty), Error);
}

TEST_CASE("gain of -6.0206 dB halves every sample") {
  AudioClip clip = testing::random_clip(15, 0.3);
  AudioClip out = apply_gain_db(clip, -6.0206);
  for (size_t i = 0; i < clip.samples.size(); ++i)
    REQUIRE(out.samples[i] ==
            doctest::Approx(clip.samples[i] * 0.5f).epsilon(1e-6));
}

TEST_CASE("zero gain is the identity") {
  AudioClip clip = testing::random_clip(16, 0.3);
  AudioClip out = apply_gain_db(clip, 0.0);
  CHECK(out.samples == clip.samples);
}

TEST_CASE("gain moves rms by exactly the gain, by direct-summation oracle") {
  AudioClip clip = testing::random_clip(17, 2.0);
  AudioClip out = apply_gain_db(clip, -9.0);
  double acc = 0.0;
  for (float s : out.samples) acc += static_cast<double>(s) * s;
  double oracle_dbfs = 10.0 * std::log10(acc / out.samples.size());
  CHECK(oracle_dbfs == doctest::Approx(rms_dbfs(clip) - 9.0).epsilon(1e-4));
  CHECK(rms_dbfs(out) == doctest::Approx(rms_dbfs(clip) - 9.0).epsilon(1e-4));
}

TEST_CASE("gains compose additively when nothing clips") {
  AudioClip clip = testing::random_clip(18, 0.5, 0.2);
  AudioClip ab = apply_gain_db(apply_gain_db(clip, -3.5), -2.5);
  AudioClip sum = apply_gain_db(clip, -6.0);
  REQUIRE(ab.samples.size() == sum.samples.size());
  for (size_t i = 0; i < ab.samples.size(); ++i)
    REQUIRE(std::abs(ab.samples[i] - sum.samples[i]) < 1e-6f);
}

TEST_CASE("positive gain hard-clips into range") {
  AudioClip clip = testing::random_clip(19, 0.5, 0.9);
  AudioClip out = apply_gain_db(clip, 20.0);
  for (float s : out.samples) {
    REQUIRE(s <= 1.0f);
    REQUIRE(s >= -1.0f);
  }
}

TEST_CASE("fractional window seconds must stay integral in samples") {
  WindowConfig cfg{0.1281};  // 2049.6 samples at 16 kHz
  CHECK_THROWS_AS(cfg.samples_at(16000), Error);
  WindowConfig ok{0.128};
  CHECK(ok.samples_at(16000) == 2048);
}
