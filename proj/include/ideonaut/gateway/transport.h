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

#ifndef IDEONAUT_GATEWAY_TRANSPORT_H_
#define IDEONAUT_GATEWAY_TRANSPORT_H_

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace ideonaut::gateway {

struct HttpReply {
  int status = 0;
  std::string body;
};

// Request/response channel carrying JSON bodies. Post throws BackendError
// when no reply could be obtained at all.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpReply Post(std::string_view path, const std::string& body) = 0;
};

// HTTP/1.1 client over cpp-httplib. A fresh connection per request keeps it
// safe to share across threads.
class HttpTransport final : public Transport {
 public:
  HttpTransport(std::string endpoint, std::chrono::milliseconds timeout,
                std::optional<std::string> bearer_token = std::nullopt);

  HttpReply Post(std::string_view path, const std::string& body) override;

 private:
  std::string endpoint_;
  std::chrono::milliseconds timeout_;
  std::optional<std::string> bearer_token_;
};

using RequestHandler =
    std::function<HttpReply(std::string_view path, const std::string& body)>;

// Calls a handler directly; used to serve the wire protocol in-process.
class InProcessTransport final : public Transport {
 public:
  explicit InProcessTransport(RequestHandler handler)
      : handler_(std::move(handler)) {}

  HttpReply Post(std::string_view path, const std::string& body) override {
    return handler_(path, body);
  }

 private:
  RequestHandler handler_;
};

}  // namespace ideonaut::gateway

#endif  // IDEONAUT_GATEWAY_TRANSPORT_H_
