// homevox/supervisor/supervisor.h

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
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace homevox {

// Time source. Live supervision uses the wall clock; tests drive a
// virtual clock tick by tick so every schedule is reproducible.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual int64_t now() const = 0;
};

class VirtualClock : public Clock {
 public:
  int64_t now() const override { return t_; }
  void advance(int64_t dt = 1) { t_ += dt; }

 private:
  int64_t t_ = 0;
};

class WallClock : public Clock {
 public:
  int64_t now() const override;
};

// One supervised component. probe and restart must return promptly
// (fire-and-forget restarts); a blocking action would stall the probing
// of every other component.
struct ComponentSpec {
  std::string name;
  std::function<bool()> probe;     // true = alive
  std::function<void()> restart;
  int64_t probe_period = 1;        // ticks between probes, > 0
  int max_restarts = 3;            // per rolling window, >= 0
  int64_t restart_window = 3600;   // rolling-window length in ticks
};

enum class EventKind { kCrashDetected, kRestarted, kRestartExhausted };

std::string event_kind_name(EventKind kind);

struct NotificationEvent {
  uint64_t sequence = 0;  // strictly increasing per run
  int64_t timestamp = 0;
  std::string component;
  EventKind kind = EventKind::kCrashDetected;
};

using NotifySink = std::function<void(const NotificationEvent &)>;

enum class Liveness { kAlive, kRestarting, kParked };

// Probes every registered component on its period, restarts dead ones,
// and notifies exactly once per incident. A component that exhausts its
// restart budget inside the rolling window is parked and never probed
// again. Construction throws Error("DuplicateComponent").
class Supervisor {
 public:
  Supervisor(std::vector<ComponentSpec> specs, NotifySink sink, Clock *clock);

  // Probes all components whose period has elapsed at clock->now().
  void poll();

  // Forces the probe to report dead at the given virtual tick.
  // Throws Error("UnknownComponent").
  void inject_fault(const std::string &component, int64_t at_tick);

  // The full event log in sequence order; calling twice after a run
  // returns the same list.
  std::vector<NotificationEvent> drain_events() const;

  Liveness liveness(const std::string &component) const;

 private:
  struct State {
    ComponentSpec spec;
    Liveness liveness = Liveness::kAlive;
    int64_t next_probe = 0;
    std::vector<int64_t> restart_times;  // pruned to the rolling window
    std::set<int64_t> fault_ticks;
  };

  void emit(State &s, EventKind kind, int64_t now);

  mutable std::mutex mutex_;
  std::map<std::string, State> components_;
  std::vector<std::string> order_;  // registration order for fair probing
  NotifySink sink_;
  Clock *clock_;
  uint64_t next_sequence_ = 1;
  std::vector<NotificationEvent> log_;
};

// Sink writing tab-separated lines: sequence, timestamp, component, kind.
NotifySink make_log_sink(const std::string &path);

// Sink POSTing a small JSON body {component, kind, timestamp, sequence}
// to the given http://host:port/path URL. Delivery failures are
// swallowed; notification must never take the supervisor down.
NotifySink make_webhook_sink(const std::string &url);

}  // namespace homevox
