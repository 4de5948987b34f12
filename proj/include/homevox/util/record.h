// homevox/util/record.h

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
#include <vector>

namespace homevox {

// Line-delimited, tab-separated records. Every on-disk format in the
// harness (catalog indexes, manifests, decision logs, profiles) is built
// from these. '#' lines and blank lines are skipped on read.

std::vector<std::string> split_fields(const std::string &line);
std::string join_fields(const std::vector<std::string> &fields);

// Reads all record lines from a file. Throws Error("IoFailure") when the
// file cannot be opened. line_numbers, when non-null, receives the
// 1-based source line of each record (for parser diagnostics).
std::vector<std::vector<std::string>> read_records(
    const std::string &path, std::vector<int> *line_numbers = nullptr);

// Decimal text with 6 significant digits; the manifest serialization of
// every floating-point field.
std::string format_g6(double v);

// Full round-trip formatting for persisted feature vectors.
std::string format_g9(double v);

double parse_double(const std::string &s, const std::string &what);
long parse_long(const std::string &s, const std::string &what);
unsigned long long parse_u64(const std::string &s, const std::string &what);

}  // namespace homevox
