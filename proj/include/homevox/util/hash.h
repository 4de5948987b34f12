// homevox/util/hash.h

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
#include <string>

namespace homevox {

// FNV-1a over raw bytes; reports trace datasets by this hash so a table
// can always be matched to its exact inputs.
uint64_t fnv1a64(const void *data, size_t len);

// Hash of a whole file's contents, hex-encoded. Throws Error("IoFailure").
std::string hash_file_hex(const std::string &path);

std::string to_hex(uint64_t v);

}  // namespace homevox
