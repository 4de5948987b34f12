// src/util/kv.cc

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

#include "homevox/util/kv.h"

#include <fstream>
#include <sstream>

#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

namespace {

std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KvFile KvFile::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("IoFailure", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

KvFile KvFile::parse(const std::string &text) {
  KvFile kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("ParseError",
                  "line " + std::to_string(lineno) + ": expected key = value");
    kv.entries_[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

bool KvFile::has(const std::string &key) const {
  return entries_.count(key) > 0;
}

std::string KvFile::get(const std::string &key,
                        const std::string &fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double KvFile::get_double(const std::string &key, double fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_double(it->second, key);
}

long KvFile::get_long(const std::string &key, long fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_long(it->second, key);
}

bool KvFile::get_bool(const std::string &key, bool fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string &v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error("ParseError", key + ": bad boolean '" + v + "'");
}

void KvFile::set(const std::string &key, const std::string &value) {
  entries_[key] = value;
}

void KvFile::save(const std::string &path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("IoFailure", "cannot write " + path);
  for (const auto &[k, v] : entries_) out << k << " = " << v << "\n";
}

}  // namespace homevox
