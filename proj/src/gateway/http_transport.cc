// Copyright 2026 The Ideonaut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <httplib.h>

#include <string>

#include "ideonaut/error.h"
#include "ideonaut/gateway/transport.h"

namespace ideonaut::gateway {

HttpTransport::HttpTransport(std::string endpoint,
                             std::chrono::milliseconds timeout,
                             std::optional<std::string> bearer_token)
    : endpoint_(std::move(endpoint)),
      timeout_(timeout),
      bearer_token_(std::move(bearer_token)) {
  // Built without TLS support, so plain http only.
  if (!endpoint_.starts_with("http://")) {
    throw ConfigError("unsupported endpoint scheme: " + endpoint_);
  }
}

HttpReply HttpTransport::Post(std::string_view path, const std::string& body) {
  httplib::Client client(endpoint_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);
  httplib::Headers headers;
  if (bearer_token_) {
    headers.emplace("Authorization", "Bearer " + *bearer_token_);
  }
  auto result = client.Post(std::string(path), headers, body,
                            "application/json");
  if (!result) {
    throw BackendError("transport failure talking to " + endpoint_ +
                       std::string(path) + ": " +
                       httplib::to_string(result.error()));
  }
  return HttpReply{result->status, result->body};
}

}  // namespace ideonaut::gateway
