// src/eval/report.cc

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

#include "homevox/eval/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "homevox/util/error.h"
#include "homevox/util/record.h"

namespace homevox {

namespace {

std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", fraction * 100.0);
  return buf;
}

std::string accuracy_cell(const ConfusionCounts &c) {
  return c.total() == 0 ? "-" : pct(accuracy(c));
}

std::string f1_cell(const ConfusionCounts &c) {
  // The explicit marker for the no-positives-anywhere case.
  return f1_defined(c) ? pct(f1(c)) : "undefined";
}

}  // namespace

void EvalReport::sort_rows() {
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow &a, const ReportRow &b) { return a.key < b.key; });
}

std::string render_csv(const EvalReport &report) {
  std::ostringstream out;
  out << "# homevox report v1\n";
  out << "# detector: " << report.detector << "\n";
  out << "# seed: " << report.seed << "\n";
  out << "# manifest_hash: " << report.manifest_hash << "\n";
  out << "# timestamp: " << report.timestamp << "\n";
  out << "key,tp,fp,tn,fn,accuracy,f1,flag\n";
  for (const auto &r : report.rows) {
    out << r.key << ',' << r.counts.tp << ',' << r.counts.fp << ','
        << r.counts.tn << ',' << r.counts.fn << ',' << accuracy_cell(r.counts)
        << ',' << f1_cell(r.counts) << ',' << r.flag << "\n";
  }
  return out.str();
}

std::string render_table(const EvalReport &report) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"key", "tp", "fp", "tn", "fn", "accuracy", "f1", "flag"});
  for (const auto &r : report.rows)
    cells.push_back({r.key, std::to_string(r.counts.tp),
                     std::to_string(r.counts.fp), std::to_string(r.counts.tn),
                     std::to_string(r.counts.fn), accuracy_cell(r.counts),
                     f1_cell(r.counts), r.flag});
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto &row : cells)
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  out << "detector: " << report.detector << "  seed: " << report.seed
      << "  manifest: " << report.manifest_hash << "\n";
  for (const auto &row : cells) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i] << std::string(width[i] - row[i].size(), ' ');
      out << (i + 1 == row.size() ? "\n" : "  ");
    }
  }
  return out.str();
}

void save_report(const EvalReport &report, const std::string &path) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw Error("IoFailure", "cannot write " + path);
  out << render_csv(report);
}

EvalReport load_report(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("IoFailure", "cannot open " + path);
  EvalReport report;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# detector: ", 0) == 0) report.detector = line.substr(12);
      else if (line.rfind("# seed: ", 0) == 0)
        report.seed = parse_u64(line.substr(8), "seed");
      else if (line.rfind("# manifest_hash: ", 0) == 0)
        report.manifest_hash = line.substr(17);
      else if (line.rfind("# timestamp: ", 0) == 0)
        report.timestamp = line.substr(13);
      continue;
    }
    if (!header_seen) {  // the column header line
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 8)
      throw Error("ParseError", path + ": report rows need 8 cells");
    ReportRow row;
    row.key = f[0];
    row.counts.tp = static_cast<uint64_t>(parse_long(f[1], "tp"));
    row.counts.fp = static_cast<uint64_t>(parse_long(f[2], "fp"));
    row.counts.tn = static_cast<uint64_t>(parse_long(f[3], "tn"));
    row.counts.fn = static_cast<uint64_t>(parse_long(f[4], "fn"));
    row.flag = f[7];
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace homevox
