// tests/test_kernels.cc

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
#include <vector>

#include "homevox/dsp/kernels.h"
#include "homevox/util/rng.h"

using namespace homevox;

namespace {

std::vector<float> random_buffer(uint64_t seed, size_t n, float amp = 0.9f) {
  Rng rng(seed);
  std::vector<float> v(n);
  for (auto &x : v) x = static_cast<float>(amp * (2.0 * rng.uniform() - 1.0));
  return v;
}

}  // namespace

// The production kernels must match the serial references bitwise for
// any input size, including sizes around the parallel threshold and the
// reduction chunk boundary.
TEST_CASE("parallel kernels match serial references bitwise") {
  const size_t sizes[] = {0,     1,     7,    1023, 8192,
                          16384, 16385, 50000, 200001};
  int case_id = 0;
  for (size_t n : sizes) {
    auto a = random_buffer(100 + case_id, n);
    auto b = random_buffer(200 + case_id, n);
    ++case_id;

    std::vector<float> out_ref(n), out_par(n);
    kernels::serial::scale_clamp(a, 1.7f, out_ref);
    kernels::scale_clamp(a, 1.7f, out_par);
    CHECK(out_ref == out_par);

    kernels::serial::mix_clamp(a, b, out_ref);
    kernels::mix_clamp(a, b, out_par);
    CHECK(out_ref == out_par);

    double s_ref = kernels::serial::sum_squares(a);
    double s_par = kernels::sum_squares(a);
    CHECK(s_ref == s_par);  // bitwise, not approximate
  }
}

TEST_CASE("scale_clamp saturates at the rails") {
  std::vector<float> in = {0.9f, -0.9f, 0.1f};
  std::vector<float> out(3);
  kernels::scale_clamp(in, 2.0f, out);
  CHECK(out[0] == 1.0f);
  CHECK(out[1] == -1.0f);
  CHECK(out[2] == doctest::Approx(0.2f));
}

TEST_CASE("sum_squares equals naive long-double accumulation") {
  auto v = random_buffer(42, 100000);
  long double acc = 0.0L;
  for (float x : v) acc += static_cast<long double>(x) * x;
  CHECK(kernels::sum_squares(v) ==
        doctest::Approx(static_cast<double>(acc)).epsilon(1e-12));
}

TEST_CASE("comb bank matches serial and a delay-and-sum oracle at zero gain") {
  auto in = random_buffer(7, 30000, 0.5f);
  const std::vector<int> delays = {475, 594, 658, 699};
  const std::vector<float> gains = {0.5f, 0.45f, 0.42f, 0.4f};
  std::vector<float> ref(in.size()), par(in.size());
  kernels::serial::comb_bank(in, delays, gains, 0.25f, ref);
  kernels::comb_bank(in, delays, gains, 0.25f, par);
  CHECK(ref == par);

  // With zero feedback each comb is a pure delay, so the bank is an
  // explicit sum of four delayed copies.
  const std::vector<float> zeros = {0.0f, 0.0f, 0.0f, 0.0f};
  std::vector<float> out(in.size());
  kernels::comb_bank(in, delays, zeros, 0.25f, out);
  for (size_t i = 0; i < in.size(); ++i) {
    float expect = 0.0f;
    for (int d : delays)
      if (i >= static_cast<size_t>(d)) expect += in[i - d];
    expect *= 0.25f;
    REQUIRE(out[i] == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("allpass passes total energy through for an impulse") {
  std::vector<float> x(4000, 0.0f);
  x[0] = 1.0f;
  kernels::allpass_inplace(x, 80, 0.5f);
  double energy = 0.0;
  for (float v : x) energy += static_cast<double>(v) * v;
  // An all-pass has unit magnitude response; the impulse energy is
  // preserved up to the truncated tail.
  CHECK(energy == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("frame kernels agree between serial and parallel paths") {
  auto x = random_buffer(11, 16000 * 5, 0.4f);
  kernels::FrameGrid grid{400, 160};
  const size_t n_frames = grid.count(x.size());
  REQUIRE(n_frames > 0);

  std::vector<float> ref(n_frames), par(n_frames);
  kernels::serial::frame_rms(x, grid, ref);
  kernels::frame_rms(x, grid, par);
  CHECK(ref == par);

  kernels::serial::frame_zcr(x, grid, ref);
  kernels::frame_zcr(x, grid, par);
  CHECK(ref == par);

  kernels::serial::pitch_frames(x, grid, 16000, 40, 320, 0.3f, ref);
  kernels::pitch_frames(x, grid, 16000, 40, 320, 0.3f, par);
  CHECK(ref == par);

  std::vector<float> cref(n_frames * 13), cpar(n_frames * 13);
  kernels::serial::cepstra_frames(x, grid, 16000, 26, 13, cref);
  kernels::cepstra_frames(x, grid, 16000, 26, 13, cpar);
  CHECK(cref == cpar);
}

TEST_CASE("frame_rms matches direct per-frame computation") {
  auto x = random_buffer(13, 4000, 0.8f);
  kernels::FrameGrid grid{400, 160};
  const size_t n_frames = grid.count(x.size());
  std::vector<float> out(n_frames);
  kernels::frame_rms(x, grid, out);
  for (size_t f = 0; f < n_frames; ++f) {
    double acc = 0.0;
    for (size_t i = 0; i < grid.frame_len; ++i) {
      float v = x[f * grid.hop + i];
      acc += static_cast<double>(v) * v;
    }
    CHECK(out[f] ==
          doctest::Approx(std::sqrt(acc / grid.frame_len)).epsilon(1e-6));
  }
}

TEST_CASE("frame_zcr counts sign changes") {
  // +1 -1 +1 -1 ... alternates every sample: zcr = 1.
  std::vector<float> alt(800);
  for (size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 == 0 ? 0.5f : -0.5f;
  kernels::FrameGrid grid{400, 400};
  std::vector<float> out(2);
  kernels::frame_zcr(alt, grid, out);
  CHECK(out[0] == doctest::Approx(1.0f));
  CHECK(out[1] == doctest::Approx(1.0f));
}

TEST_CASE("pitch_frames finds a pure tone's period") {
  const int rate = 16000;
  const double f0 = 200.0;
  std::vector<float> x(rate);
  for (size_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<float>(
        0.5 * std::sin(2.0 * 3.14159265358979323846 * f0 * i / rate));
  kernels::FrameGrid grid{400, 160};
  const size_t n_frames = grid.count(x.size());
  std::vector<float> pitch(n_frames);
  kernels::pitch_frames(x, grid, rate, 40, 320, 0.3f, pitch);
  // rate / round(rate/f0) = 16000 / 80 = 200 exactly.
  for (size_t f = 0; f < n_frames; ++f)
    CHECK(pitch[f] == doctest::Approx(200.0f).epsilon(0.02));
}

TEST_CASE("cepstra ignore pure gain") {
  // Dropping c0 makes a constant log-energy shift invisible.
  auto x = random_buffer(21, 16000, 0.4f);
  std::vector<float> half(x.size());
  for (size_t i = 0; i < x.size(); ++i) half[i] = 0.5f * x[i];
  kernels::FrameGrid grid{400, 160};
  const size_t n_frames = grid.count(x.size());
  std::vector<float> c1(n_frames * 13), c2(n_frames * 13);
  kernels::cepstra_frames(x, grid, 16000, 26, 13, c1);
  kernels::cepstra_frames(half, grid, 16000, 26, 13, c2);
  for (size_t i = 0; i < c1.size(); ++i)
    REQUIRE(c1[i] == doctest::Approx(c2[i]).epsilon(1e-3));
}
