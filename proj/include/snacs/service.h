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

#ifndef SNACS_SERVICE_H_
#define SNACS_SERVICE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "snacs/corpus.h"
#include "snacs/hierarchy.h"
#include "snacs/lexicon.h"
#include "snacs/matcher.h"
#include "snacs/translit.h"
#include "snacs/validator.h"

namespace snacs {

struct ToolkitPaths {
  std::filesystem::path hierarchy;
  std::filesystem::path lexicon;
  std::filesystem::path diagnostics;
  std::filesystem::path translit_exceptions;
  // Document store directory; no store when unset.
  std::optional<std::filesystem::path> corpus_dir;

  // Standard file names under `data_dir`; corpus_dir stays unset.
  static ToolkitPaths InDirectory(const std::filesystem::path &data_dir);
};

// Everything loaded once at startup. Immutable except for the store.
class Toolkit {
 public:
  // Throws LoadError or Error.
  static std::unique_ptr<Toolkit> Load(const ToolkitPaths &paths);

  Toolkit(const Toolkit &) = delete;
  Toolkit &operator=(const Toolkit &) = delete;

  const Hierarchy &hierarchy() const { return hierarchy_; }
  const Lexicon &lexicon() const { return lexicon_; }
  const Diagnostics &diagnostics() const { return diagnostics_; }
  const Transliterator &transliterator() const { return translit_; }
  const Matcher &matcher() const { return *matcher_; }
  const Validator &validator() const { return *validator_; }
  DocumentStore *store() const { return store_.get(); }

 private:
  Toolkit(Hierarchy h, Lexicon l);

  Hierarchy hierarchy_;
  Lexicon lexicon_;
  Diagnostics diagnostics_;
  Transliterator translit_;
  std::unique_ptr<Matcher> matcher_;
  std::unique_ptr<Validator> validator_;
  std::unique_ptr<DocumentStore> store_;
};

struct ApiRequest {
  std::string method;
  // Path without query string; may be percent-encoded.
  std::string path;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json; charset=utf-8";
};

// HTTP routes as a pure function of the request and the toolkit state.
class Api {
 public:
  explicit Api(const Toolkit &toolkit) : toolkit_(toolkit) {}

  ApiResponse Handle(const ApiRequest &request) const;

 private:
  const Toolkit &toolkit_;
};

// Thin HTTP listener that forwards every request to an Api.
class HttpServer {
 public:
  explicit HttpServer(const Api &api);
  ~HttpServer();

  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int Bind(const std::string &host, int port);
  // Blocks until Stop() is called. Requires a successful Bind().
  bool Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace snacs

#endif  // SNACS_SERVICE_H_
