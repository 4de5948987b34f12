// src/audio/wav_io.cc

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

#include "homevox/audio/wav_io.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "homevox/util/error.h"

namespace homevox {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;

uint32_t read_u32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string &s, uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string &s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

float clamp1(float v) {
  if (v > 1.0f) return 1.0f;
  if (v < -1.0f) return -1.0f;
  return v;
}

}  // namespace

AudioClip load_wav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoFailure", "cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw Error("CorruptHeader", path + ": not a RIFF WAVE file");

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char *data = nullptr;
  uint32_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char *hdr = bytes.data() + pos;
    uint32_t chunk_len = read_u32(hdr + 4);
    if (pos + 8 + chunk_len > bytes.size())
      throw Error("CorruptHeader", path + ": chunk overruns file");
    const unsigned char *body = hdr + 8;
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16)
        throw Error("CorruptHeader", path + ": short fmt chunk");
      format = read_u16(body);
      channels = read_u16(body + 2);
      rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);  // chunks are 2-byte aligned
  }
  if (!have_fmt || data == nullptr)
    throw Error("CorruptHeader", path + ": missing fmt or data chunk");
  if (format != kFormatPcm && format != kFormatFloat)
    throw Error("UnsupportedFormat",
                path + ": compressed or extensible codec (format tag " +
                    std::to_string(format) + ")");
  if (channels != 1)
    throw Error("UnsupportedFormat", path + ": " + std::to_string(channels) +
                                         " channels, mono required");
  if (rate == 0) throw Error("CorruptHeader", path + ": zero sample rate");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.id = std::filesystem::path(path).stem().string();

  if (format == kFormatPcm && bits == 16) {
    size_t n = data_len / 2;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int16_t v = static_cast<int16_t>(data[2 * i] | (data[2 * i + 1] << 8));
      clip.samples[i] = static_cast<float>(v) / 32768.0f;
    }
  } else if (format == kFormatPcm && bits == 8) {
    clip.samples.resize(data_len);
    for (size_t i = 0; i < data_len; ++i)
      clip.samples[i] = (static_cast<int>(data[i]) - 128) / 128.0f;
  } else if (format == kFormatPcm && bits == 24) {
    size_t n = data_len / 3;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int32_t v = data[3 * i] | (data[3 * i + 1] << 8) |
                  (data[3 * i + 2] << 16);
      if (v & 0x800000) v |= ~0xffffff;  // sign extend
      clip.samples[i] = static_cast<float>(v) / 8388608.0f;
    }
  } else if (format == kFormatFloat && bits == 32) {
    size_t n = data_len / 4;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      float v;
      std::memcpy(&v, data + 4 * i, 4);
      clip.samples[i] = clamp1(v);
    }
  } else {
    throw Error("UnsupportedFormat",
                path + ": " + std::to_string(bits) + "-bit format tag " +
                    std::to_string(format));
  }
  return clip;
}

void save_wav(const AudioClip &clip, const std::string &path) {
  const uint32_t n = static_cast<uint32_t>(clip.samples.size());
  const uint32_t data_len = n * 2;
  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32(out, 36 + data_len);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<uint32_t>(clip.sample_rate) * 2);  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits
  out += "data";
  put_u32(out, data_len);
  for (uint32_t i = 0; i < n; ++i) {
    long q = std::lrintf(clip.samples[i] * 32768.0f);
    if (q > 32767) q = 32767;
    if (q < -32768) q = -32768;
    put_u16(out, static_cast<uint16_t>(static_cast<int16_t>(q)));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("IoFailure", "cannot write " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error("IoFailure", "short write to " + path);
}

}  // namespace homevox
