// src/supervisor/supervisor.cc

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

#include "homevox/supervisor/supervisor.h"

#include <algorithm>
#include <ctime>

#include "homevox/util/error.h"

namespace homevox {

int64_t WallClock::now() const { return static_cast<int64_t>(std::time(nullptr)); }

std::string event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kCrashDetected: return "crash_detected";
    case EventKind::kRestarted: return "restarted";
    case EventKind::kRestartExhausted: return "restart_exhausted";
  }
  return "crash_detected";
}

Supervisor::Supervisor(std::vector<ComponentSpec> specs, NotifySink sink,
                       Clock *clock)
    : sink_(std::move(sink)), clock_(clock) {
  const int64_t now = clock_->now();
  for (auto &spec : specs) {
    if (spec.probe_period <= 0)
      throw Error("BadComponentSpec", spec.name + ": probe period must be > 0");
    if (spec.max_restarts < 0)
      throw Error("BadComponentSpec", spec.name + ": max_restarts must be >= 0");
    if (components_.count(spec.name))
      throw Error("DuplicateComponent", spec.name);
    State s;
    s.spec = std::move(spec);
    s.next_probe = now;
    order_.push_back(s.spec.name);
    components_.emplace(s.spec.name, std::move(s));
  }
}

void Supervisor::emit(State &s, EventKind kind, int64_t now) {
  NotificationEvent event;
  event.sequence = next_sequence_++;
  event.timestamp = now;
  event.component = s.spec.name;
  event.kind = kind;
  log_.push_back(event);
  if (sink_) sink_(event);
}

void Supervisor::poll() {
  std::lock_guard<std::mutex> lock(mutex_);
  const int64_t now = clock_->now();
  for (const auto &name : order_) {
    State &s = components_.at(name);
    if (s.liveness == Liveness::kParked) continue;
    if (now < s.next_probe) continue;
    s.next_probe = now + s.spec.probe_period;

    bool alive = s.spec.probe ? s.spec.probe() : true;
    if (auto it = s.fault_ticks.find(now); it != s.fault_ticks.end()) {
      alive = false;
      s.fault_ticks.erase(it);  // the restart clears the injected fault
    }
    if (alive) {
      s.liveness = Liveness::kAlive;
      continue;
    }

    // One incident: exactly one crash_detected, then either a restart
    // or, with the rolling budget spent, parking.
    emit(s, EventKind::kCrashDetected, now);
    auto &times = s.restart_times;
    times.erase(std::remove_if(times.begin(), times.end(),
                               [&](int64_t t) {
                                 return t <= now - s.spec.restart_window;
                               }),
                times.end());
    if (static_cast<int>(times.size()) < s.spec.max_restarts) {
      if (s.spec.restart) s.spec.restart();
      times.push_back(now);
      s.liveness = Liveness::kRestarting;
      emit(s, EventKind::kRestarted, now);
    } else {
      s.liveness = Liveness::kParked;
      emit(s, EventKind::kRestartExhausted, now);
    }
  }
}

void Supervisor::inject_fault(const std::string &component, int64_t at_tick) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) throw Error("UnknownComponent", component);
  it->second.fault_ticks.insert(at_tick);
}

std::vector<NotificationEvent> Supervisor::drain_events() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return log_;
}

Liveness Supervisor::liveness(const std::string &component) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) throw Error("UnknownComponent", component);
  return it->second.liveness;
}

}  // namespace homevox
