// homevox/util/kv.h

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

#include <map>
#include <string>

namespace homevox {

// Flat `key = value` config files ('#' comments, blank lines ignored).
class KvFile {
 public:
  KvFile() = default;
  static KvFile load(const std::string &path);
  static KvFile parse(const std::string &text);

  bool has(const std::string &key) const;
  std::string get(const std::string &key, const std::string &fallback) const;
  double get_double(const std::string &key, double fallback) const;
  long get_long(const std::string &key, long fallback) const;
  bool get_bool(const std::string &key, bool fallback) const;

  void set(const std::string &key, const std::string &value);
  void save(const std::string &path) const;

  const std::map<std::string, std::string> &entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace homevox
