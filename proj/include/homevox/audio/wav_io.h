// homevox/audio/wav_io.h

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

#include <string>

#include "homevox/audio/clip.h"

namespace homevox {

// RIFF PCM WAV, mono only. 8/16/24-bit integer and 32-bit float data are
// accepted; samples normalize to [-1, 1]. The clip id is the file stem.
// Throws Error("UnsupportedFormat") for multi-channel or compressed
// input, Error("CorruptHeader") for malformed files.
AudioClip load_wav(const std::string &path);

// 16-bit PCM writer, round-to-nearest quantization. Loading a 16-bit
// file and saving it again reproduces the data chunk byte for byte.
void save_wav(const AudioClip &clip, const std::string &path);

}  // namespace homevox
