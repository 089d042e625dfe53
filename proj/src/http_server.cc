// Copyright 2026 The snacs-hi Authors.
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

#include "httplib.h"
#include "snacs/service.h"

namespace snacs {

struct HttpServer::Impl {
  explicit Impl(const Api &a) : api(a) {}

  const Api &api;
  httplib::Server server;
};

HttpServer::HttpServer(const Api &api) : impl_(std::make_unique<Impl>(api)) {
  auto forward = [this](const httplib::Request &req, httplib::Response &res) {
    ApiResponse out = impl_->api.Handle(ApiRequest{req.method, req.path, req.body});
    res.status = out.status;
    res.set_content(out.body, out.content_type.c_str());
  };
  const char *kPattern = R"(/.*)";
  impl_->server.Get(kPattern, forward);
  impl_->server.Post(kPattern, forward);
  impl_->server.Put(kPattern, forward);
  impl_->server.Delete(kPattern, forward);
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string &host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host.c_str());
  return impl_->server.bind_to_port(host.c_str(), port) ? port : -1;
}

bool HttpServer::Listen() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace snacs
