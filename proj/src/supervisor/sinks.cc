// src/supervisor/sinks.cc

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

#include <fstream>
#include <memory>
#include <sstream>

#include "homevox/supervisor/supervisor.h"
#include "homevox/util/error.h"

#include "httplib.h"

namespace homevox {

NotifySink make_log_sink(const std::string &path) {
  auto out = std::make_shared<std::ofstream>(path, std::ios::app);
  if (!*out) throw Error("IoFailure", "cannot open notification log " + path);
  return [out](const NotificationEvent &e) {
    *out << e.sequence << '\t' << e.timestamp << '\t' << e.component << '\t'
         << event_kind_name(e.kind) << '\n';
    out->flush();
  };
}

NotifySink make_webhook_sink(const std::string &url) {
  // Split http://host:port/path into origin and path.
  std::string origin = url;
  std::string path = "/";
  size_t scheme = url.find("://");
  if (scheme != std::string::npos) {
    size_t slash = url.find('/', scheme + 3);
    if (slash != std::string::npos) {
      origin = url.substr(0, slash);
      path = url.substr(slash);
    }
  }
  return [origin, path](const NotificationEvent &e) {
    std::ostringstream body;
    body << "{\"component\":\"" << e.component << "\",\"kind\":\""
         << event_kind_name(e.kind) << "\",\"timestamp\":" << e.timestamp
         << ",\"sequence\":" << e.sequence << "}";
    httplib::Client client(origin);
    client.set_connection_timeout(2, 0);
    client.Post(path, body.str(), "application/json");
    // Errors are dropped: losing a webhook must not stop supervision.
  };
}

}  // namespace homevox
