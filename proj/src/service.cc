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

#include "snacs/service.h"

#include <cctype>
#include <string_view>

#include "snacs/json_codec.h"
#include "text_util.h"

namespace snacs {

namespace {

constexpr std::string_view kDocumentsPrefix = "/documents/";
constexpr std::string_view kLexiconPrefix = "/lexicon/";
constexpr std::string_view kDiagnosticsPrefix = "/diagnostics/";

ApiResponse JsonResponse(int status, const Json &body) {
  ApiResponse r;
  r.status = status;
  r.body = body.dump();
  return r;
}

ApiResponse ErrorResponse(int status, std::string_view code,
                          const std::string &message,
                          const std::vector<FieldError> &fields = {}) {
  Json f = Json::array();
  for (const auto &e : fields) {
    f.push_back({{"field", e.field}, {"message", e.message}});
  }
  return JsonResponse(status, {{"error",
                                {{"code", std::string(code)},
                                 {"message", message},
                                 {"fields", f}}}});
}

std::string PercentDecode(std::string_view in) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '%' && i + 2 < in.size() &&
        std::isxdigit(static_cast<unsigned char>(in[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(in[i + 2]))) {
      out.push_back(static_cast<char>(
          std::stoi(std::string(in.substr(i + 1, 2)), nullptr, 16)));
      i += 2;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::optional<Json> ParseBody(const std::string &body, ApiResponse &error) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error &e) {
    error = ErrorResponse(422, "MALFORMED_PAYLOAD", "body is not valid JSON",
                          {{"", e.what()}});
    return std::nullopt;
  }
}

Json IssuesJson(const std::vector<ValidationIssue> &issues) {
  Json out = Json::array();
  for (const auto &i : issues) out.push_back(ToJson(i));
  return out;
}

Json IssueSummary(const std::vector<ValidationIssue> &issues) {
  std::size_t errors = 0;
  for (const auto &i : issues) errors += i.severity == Severity::kError;
  return {{"issues", IssuesJson(issues)},
          {"errors", errors},
          {"warnings", issues.size() - errors}};
}

std::vector<std::string> Whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

class Router {
 public:
  Router(const Toolkit &tk, const ApiRequest &req)
      : tk_(tk), req_(req), path_(PercentDecode(req.path)) {}

  ApiResponse Dispatch() {
    const std::string &m = req_.method;
    if (path_ == "/hierarchy") {
      return m == "GET" ? JsonResponse(200, ToJson(tk_.hierarchy())) : NotAllowed();
    }
    if (StartsWith(path_, kLexiconPrefix)) {
      return m == "GET" ? Lexicon(path_.substr(kLexiconPrefix.size())) : NotAllowed();
    }
    if (path_ == "/match") return m == "POST" ? Match() : NotAllowed();
    if (path_ == "/validate") return m == "POST" ? Validate() : NotAllowed();
    if (path_ == "/suggest") return m == "POST" ? Suggest() : NotAllowed();
    if (StartsWith(path_, kDiagnosticsPrefix)) {
      return m == "GET" ? Diagnostics(path_.substr(kDiagnosticsPrefix.size()))
                        : NotAllowed();
    }
    if (path_ == "/documents") return m == "GET" ? ListDocuments() : NotAllowed();
    if (StartsWith(path_, kDocumentsPrefix)) {
      std::string id = path_.substr(kDocumentsPrefix.size());
      if (m == "GET") return GetDocument(id);
      if (m == "PUT") return PutDocument(id);
      return NotAllowed();
    }
    if (path_ == "/stats") return m == "GET" ? Stats() : NotAllowed();
    return ErrorResponse(404, "NOT_FOUND", "no route for " + path_);
  }

 private:
  ApiResponse NotAllowed() {
    return ErrorResponse(405, "METHOD_NOT_ALLOWED",
                         req_.method + " not supported on " + path_);
  }

  ApiResponse Lexicon(const std::string &lemma) {
    const LexEntry *e = tk_.lexicon().Lookup(lemma);
    if (e == nullptr) {
      return ErrorResponse(404, codes::kUnknownLemma, "unknown lemma: " + lemma);
    }
    return JsonResponse(200, ToJson(*e));
  }

  ApiResponse Match() {
    ApiResponse err;
    auto body = ParseBody(req_.body, err);
    if (!body) return err;
    Sentence s;
    s.source_id = "request";
    if (body->is_object() && body->contains("id") && (*body)["id"].is_string()) {
      s.source_id = (*body)["id"].get<std::string>();
    }
    if (body->is_object() && body->contains("tokens") &&
        (*body)["tokens"].is_array()) {
      for (const auto &t : (*body)["tokens"]) {
        if (!t.is_string() || t.get<std::string>().empty()) {
          return ErrorResponse(422, "MALFORMED_PAYLOAD", "bad tokens",
                               {{"tokens", "must hold non-empty strings"}});
        }
        s.tokens.push_back(t.get<std::string>());
      }
    } else if (body->is_object() && body->contains("text") &&
               (*body)["text"].is_string()) {
      auto roman = tk_.transliterator().ToIast((*body)["text"].get<std::string>());
      s.tokens = Whitespace(roman.text);
    } else {
      return ErrorResponse(422, "MALFORMED_PAYLOAD", "missing sentence",
                           {{"tokens", "provide tokens (array) or text (string)"}});
    }
    Json targets = Json::array();
    for (const auto &t : tk_.matcher().FindTargets(s)) targets.push_back(ToJson(t));
    return JsonResponse(200, {{"id", s.source_id},
                              {"tokens", s.tokens},
                              {"targets", targets}});
  }

  ApiResponse Validate() {
    ApiResponse err;
    auto body = ParseBody(req_.body, err);
    if (!body) return err;
    std::vector<Document> docs;
    if (body->is_object() && body->contains("corpus")) {
      if (!(*body)["corpus"].is_string()) {
        return ErrorResponse(422, "MALFORMED_PAYLOAD", "bad corpus",
                             {{"corpus", "must be a string"}});
      }
      try {
        docs = ParseCorpus((*body)["corpus"].get<std::string>());
      } catch (const LoadError &e) {
        return ErrorResponse(422, e.code(), e.what(), {{"corpus", e.what()}});
      }
    } else {
      std::vector<FieldError> fields;
      Document doc = DocumentFromJson(*body, fields);
      if (!fields.empty()) {
        return ErrorResponse(422, "MALFORMED_PAYLOAD", "invalid document", fields);
      }
      docs.push_back(std::move(doc));
    }
    std::vector<ValidationIssue> issues;
    for (const auto &d : docs) {
      auto per = tk_.validator().ValidateDocument(d.records, d.sentences);
      issues.insert(issues.end(), per.begin(), per.end());
    }
    return JsonResponse(200, IssueSummary(issues));
  }

  ApiResponse Suggest() {
    ApiResponse err;
    auto body = ParseBody(req_.body, err);
    if (!body) return err;
    if (!body->is_object()) {
      return ErrorResponse(422, "MALFORMED_PAYLOAD", "body must be an object");
    }
    AdpositionTarget target;
    if (body->contains("lemma")) {
      if (!(*body)["lemma"].is_string()) {
        return ErrorResponse(422, "MALFORMED_PAYLOAD", "bad lemma",
                             {{"lemma", "must be a string"}});
      }
      target.lemma = NormalizeKey((*body)["lemma"].get<std::string>());
    } else if (body->contains("tokens") && body->contains("indices") &&
               (*body)["tokens"].is_array() && (*body)["indices"].is_array()) {
      const Json &tokens = (*body)["tokens"];
      for (const auto &i : (*body)["indices"]) {
        if (!i.is_number_unsigned() || i.get<std::size_t>() >= tokens.size() ||
            !tokens[i.get<std::size_t>()].is_string()) {
          return ErrorResponse(422, codes::kMalformedTarget, "bad target",
                               {{"indices", "must index string tokens"}});
        }
        target.token_indices.push_back(i.get<std::size_t>());
        target.surface.push_back(tokens[i.get<std::size_t>()].get<std::string>());
      }
      target.lemma = tk_.lexicon().NormalizeSurface(target.surface).value_or(
          text::Join(target.surface, "_"));
    } else {
      return ErrorResponse(422, "MALFORMED_PAYLOAD", "missing target",
                           {{"lemma", "provide lemma, or tokens with indices"}});
    }
    auto result = tk_.validator().Suggest(target);
    Json candidates = Json::array();
    for (const auto &c : result.candidates) candidates.push_back(ToJson(c));
    return JsonResponse(200, {{"lemma", target.lemma},
                              {"candidates", candidates},
                              {"issues", IssuesJson(result.issues)}});
  }

  ApiResponse Diagnostics(const std::string &key) {
    Json lists = Json::array();
    for (const auto *c : tk_.diagnostics().For(key)) lists.push_back(ToJson(*c));
    return JsonResponse(200, {{"key", key}, {"checklists", lists}});
  }

  DocumentStore *Store(ApiResponse &err) {
    DocumentStore *store = tk_.store();
    if (store == nullptr) {
      err = ErrorResponse(503, "NO_STORE", "server started without a corpus directory");
    }
    return store;
  }

  ApiResponse ListDocuments() {
    ApiResponse err;
    DocumentStore *store = Store(err);
    if (!store) return err;
    Json docs = Json::array();
    for (const auto &d : store->All()) {
      docs.push_back({{"id", d->id},
                      {"version", d->version},
                      {"sentences", d->sentences.size()},
                      {"records", d->records.size()}});
    }
    return JsonResponse(200, {{"documents", docs}});
  }

  ApiResponse GetDocument(const std::string &id) {
    ApiResponse err;
    DocumentStore *store = Store(err);
    if (!store) return err;
    auto doc = store->Get(id);
    if (!doc) return ErrorResponse(404, "UNKNOWN_DOCUMENT", "no document " + id);
    return JsonResponse(200, ToJson(*doc));
  }

  ApiResponse PutDocument(const std::string &id) {
    ApiResponse err;
    DocumentStore *store = Store(err);
    if (!store) return err;
    if (!DocumentStore::IsValidId(id)) {
      return ErrorResponse(422, "MALFORMED_PAYLOAD", "bad document id",
                           {{"id", "use letters, digits, '_', '.', '-'"}});
    }
    auto body = ParseBody(req_.body, err);
    if (!body) return err;
    std::vector<FieldError> fields;
    if (body->is_object() && !body->contains("version")) {
      fields.push_back({"version", "required: the version last read (0 for new)"});
    }
    Document doc = DocumentFromJson(*body, fields);
    if (!doc.id.empty() && doc.id != id) {
      fields.push_back({"id", "does not match the URL"});
    }
    if (!fields.empty()) {
      return ErrorResponse(422, "MALFORMED_PAYLOAD", "invalid document", fields);
    }
    doc.id = id;
    auto issues = tk_.validator().ValidateDocument(doc.records, doc.sentences);
    if (HasErrors(issues)) {
      Json out = IssueSummary(issues);
      out["error"] = {{"code", "VALIDATION_FAILED"},
                      {"message", "document has validation errors"},
                      {"fields", Json::array()}};
      return JsonResponse(422, out);
    }
    std::int64_t expected = doc.version;
    try {
      auto stored = store->Put(std::move(doc), expected);
      return JsonResponse(200, {{"id", stored->id},
                                {"version", stored->version},
                                {"warnings", IssuesJson(issues)}});
    } catch (const VersionConflict &e) {
      auto out = ErrorResponse(409, "VERSION_CONFLICT", e.what());
      Json body_json = Json::parse(out.body);
      body_json["current_version"] = e.current();
      return JsonResponse(409, body_json);
    } catch (const Error &e) {
      return ErrorResponse(500, "STORE_FAILURE", e.what());
    }
  }

  ApiResponse Stats() {
    ApiResponse err;
    DocumentStore *store = Store(err);
    if (!store) return err;
    std::vector<Document> docs;
    for (const auto &d : store->All()) docs.push_back(*d);
    return JsonResponse(200, ToJson(ComputeStats(docs, &tk_.matcher())));
  }

  const Toolkit &tk_;
  const ApiRequest &req_;
  std::string path_;
};

}  // namespace

ToolkitPaths ToolkitPaths::InDirectory(const std::filesystem::path &data_dir) {
  ToolkitPaths p;
  p.hierarchy = data_dir / "hierarchy.tsv";
  p.lexicon = data_dir / "lexicon.tsv";
  p.diagnostics = data_dir / "diagnostics.json";
  p.translit_exceptions = data_dir / "translit_exceptions.tsv";
  return p;
}

Toolkit::Toolkit(Hierarchy h, Lexicon l)
    : hierarchy_(std::move(h)), lexicon_(std::move(l)) {}

std::unique_ptr<Toolkit> Toolkit::Load(const ToolkitPaths &paths) {
  auto hierarchy = Hierarchy::LoadFile(paths.hierarchy);
  auto lexicon = Lexicon::LoadFile(paths.lexicon, hierarchy);
  std::unique_ptr<Toolkit> tk(new Toolkit(std::move(hierarchy), std::move(lexicon)));
  tk->diagnostics_ = Diagnostics::LoadFile(paths.diagnostics, tk->lexicon_);
  if (!paths.translit_exceptions.empty()) {
    tk->translit_ = Transliterator::WithExceptionsFile(paths.translit_exceptions);
  }
  tk->matcher_ = std::make_unique<Matcher>(tk->lexicon_);
  tk->validator_ = std::make_unique<Validator>(tk->hierarchy_, tk->lexicon_);
  if (paths.corpus_dir) {
    tk->store_ = std::make_unique<DocumentStore>(*paths.corpus_dir);
  }
  return tk;
}

ApiResponse Api::Handle(const ApiRequest &request) const {
  try {
    return Router(toolkit_, request).Dispatch();
  } catch (const std::exception &e) {
    return ErrorResponse(500, "INTERNAL", e.what());
  }
}

}  // namespace snacs
