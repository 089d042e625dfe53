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

#include "snacs/validator.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "snacs/error.h"
#include "snacs/translit.h"
#include "text_util.h"

namespace snacs {

namespace {

ValidationIssue MakeIssue(Severity severity, std::string_view code,
                          std::string message, std::string anchor,
                          std::string location) {
  return ValidationIssue{severity, std::string(code), std::move(message),
                         std::move(anchor), std::move(location)};
}

std::string FirstAnchor(const LexEntry &e) {
  return e.notes.empty() ? std::string() : e.notes.front();
}

bool SurfaceMatches(const Lexicon &lexicon, const Sentence &sentence,
                    const AdpositionTarget &target) {
  std::vector<std::string> tokens;
  for (std::size_t i : target.token_indices) tokens.push_back(sentence.tokens[i]);
  auto lemma = lexicon.NormalizeSurface(tokens);
  if (lemma && *lemma == target.lemma) return true;
  if (tokens.size() == 1) {
    std::string key = NormalizeKey(tokens[0]);
    std::size_t dash = key.rfind('-');
    if (dash != std::string::npos && dash + 1 < key.size()) {
      auto seg = lexicon.NormalizeSurface({key.substr(dash + 1)});
      const LexEntry *e = seg ? lexicon.Lookup(*seg) : nullptr;
      if (e && e->category == Category::kSuffix && e->lemma == target.lemma) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view StatusName(Status status) {
  return status == Status::kConfirmed ? "confirmed" : "draft";
}

std::optional<Status> ParseStatus(std::string_view name) {
  if (name == "draft") return Status::kDraft;
  if (name == "confirmed") return Status::kConfirmed;
  return std::nullopt;
}

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

const std::vector<std::string_view> &IssueCodes() {
  static const std::vector<std::string_view> kCodes = {
      codes::kUnknownLabel,    codes::kUnknownLemma,
      codes::kUnlicensedConstrual, codes::kNovelScene,
      codes::kMalformedTarget, codes::kSurfaceMismatch,
      codes::kOverlap,         codes::kDuplicate,
      codes::kUnknownSentence,
  };
  return kCodes;
}

bool IsIssueCode(std::string_view code) {
  const auto &all = IssueCodes();
  return std::find(all.begin(), all.end(), code) != all.end();
}

bool HasErrors(const std::vector<ValidationIssue> &issues) {
  return std::any_of(issues.begin(), issues.end(), [](const auto &i) {
    return i.severity == Severity::kError;
  });
}

std::string TargetLocation(const std::string &sentence_id,
                           const AdpositionTarget &target) {
  std::string out = sentence_id + "@";
  for (std::size_t i = 0; i < target.token_indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(target.token_indices[i]);
  }
  return out;
}

std::vector<ValidationIssue> Validator::Validate(
    const AnnotationRecord &record, const Sentence *sentence) const {
  std::vector<ValidationIssue> issues;
  const std::string loc = TargetLocation(record.sentence_id, record.target);
  const auto &idx = record.target.token_indices;

  bool well_formed = !idx.empty();
  for (std::size_t i = 1; i < idx.size() && well_formed; ++i) {
    well_formed = idx[i] > idx[i - 1];
  }
  if (!well_formed) {
    issues.push_back(MakeIssue(Severity::kError, codes::kMalformedTarget,
                               "token indices must be non-empty and strictly "
                               "increasing",
                               "", loc));
    return issues;
  }
  if (sentence && idx.back() >= sentence->tokens.size()) {
    issues.push_back(MakeIssue(
        Severity::kError, codes::kMalformedTarget,
        "token index " + std::to_string(idx.back()) + " past sentence end (" +
            std::to_string(sentence->tokens.size()) + " tokens)",
        "", loc));
    return issues;
  }

  bool labels_ok = true;
  std::set<std::string> reported;
  for (const std::string *label :
       {&record.construal.scene, &record.construal.function}) {
    if (!hierarchy_.Contains(*label) && reported.insert(*label).second) {
      labels_ok = false;
      issues.push_back(MakeIssue(Severity::kError, codes::kUnknownLabel,
                                 "unknown label: " + *label, "", loc));
    }
  }

  const LexEntry *entry = lexicon_.Lookup(record.target.lemma);
  if (entry == nullptr) {
    issues.push_back(MakeIssue(Severity::kError, codes::kUnknownLemma,
                               "unknown lemma: " + record.target.lemma, "",
                               loc));
    return issues;
  }

  if (sentence && !SurfaceMatches(lexicon_, *sentence, record.target)) {
    std::vector<std::string> tokens;
    for (std::size_t i : idx) tokens.push_back(sentence->tokens[i]);
    issues.push_back(MakeIssue(Severity::kError, codes::kSurfaceMismatch,
                               "tokens '" + text::Join(tokens, " ") +
                                   "' are not a surface of " + entry->lemma,
                               FirstAnchor(*entry), loc));
  }

  if (!labels_ok) return issues;
  if (entry->FindLicense(record.construal) != nullptr) return issues;

  for (const License &l : entry->licenses) {
    if (l.open_scene && l.construal.function == record.construal.function) {
      issues.push_back(MakeIssue(
          Severity::kWarning, codes::kNovelScene,
          "scene " + record.construal.scene + " not listed for " +
              entry->lemma + " with function " + l.construal.function,
          l.anchor, loc));
      return issues;
    }
  }
  issues.push_back(MakeIssue(
      Severity::kError, codes::kUnlicensedConstrual,
      record.construal.ToString() + " is not licensed for " + entry->lemma,
      FirstAnchor(*entry), loc));
  return issues;
}

std::vector<ValidationIssue> Validator::ValidateDocument(
    const std::vector<AnnotationRecord> &records,
    const std::vector<Sentence> &sentences) const {
  std::map<std::string, const Sentence *> by_id;
  for (const auto &s : sentences) by_id.emplace(s.source_id, &s);

  std::vector<ValidationIssue> issues;
  for (const auto &r : records) {
    auto it = by_id.find(r.sentence_id);
    if (it == by_id.end()) {
      issues.push_back(MakeIssue(Severity::kError, codes::kUnknownSentence,
                                 "no sentence with id " + r.sentence_id, "",
                                 TargetLocation(r.sentence_id, r.target)));
      continue;
    }
    auto per = Validate(r, it->second);
    issues.insert(issues.end(), per.begin(), per.end());
  }

  for (std::size_t a = 0; a < records.size(); ++a) {
    for (std::size_t b = a + 1; b < records.size(); ++b) {
      const auto &ra = records[a];
      const auto &rb = records[b];
      if (ra.sentence_id != rb.sentence_id) continue;
      const auto loc = TargetLocation(rb.sentence_id, rb.target);
      if (ra.target.token_indices == rb.target.token_indices) {
        if (ra.annotator == rb.annotator) {
          issues.push_back(MakeIssue(
              Severity::kError, codes::kDuplicate,
              "annotator " + rb.annotator + " labelled this target twice", "",
              loc));
        }
      } else if (ra.target.Overlaps(rb.target)) {
        issues.push_back(MakeIssue(
            Severity::kError, codes::kOverlap,
            "target overlaps " + TargetLocation(ra.sentence_id, ra.target), "",
            loc));
      }
    }
  }
  return issues;
}

SuggestResult Validator::Suggest(const AdpositionTarget &target) const {
  SuggestResult result;
  const LexEntry *entry = lexicon_.Lookup(target.lemma);
  if (entry == nullptr) {
    result.issues.push_back(MakeIssue(Severity::kWarning, codes::kUnknownLemma,
                                      "unknown lemma: " + target.lemma, "",
                                      ""));
    return result;
  }
  for (const License &l : entry->licenses) {
    result.candidates.push_back(
        Suggestion{l.construal, l.rank, l.anchor, l.condition, l.provisional});
  }
  return result;
}

const DiagnosticOutcome *DiagnosticChecklist::Evaluate(
    std::string_view answers) const {
  auto it = outcomes.find(std::string(answers));
  return it == outcomes.end() ? nullptr : &it->second;
}

Diagnostics Diagnostics::Load(std::string_view json_text,
                              const Lexicon &lexicon) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw LoadError(std::string("diagnostics: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("checklists") ||
      !doc["checklists"].is_array()) {
    throw LoadError("diagnostics: missing \"checklists\" array", 0);
  }

  auto str = [](const nlohmann::json &obj, const char *key,
                const std::string &where) -> std::string {
    if (!obj.contains(key) || !obj[key].is_string()) {
      throw LoadError(where + ": missing string field \"" + key + "\"", 0);
    }
    return obj[key].get<std::string>();
  };
  auto str_list = [](const nlohmann::json &obj, const char *key,
                     const std::string &where) {
    std::vector<std::string> out;
    if (!obj.contains(key) || !obj[key].is_array()) {
      throw LoadError(where + ": missing array field \"" + key + "\"", 0);
    }
    for (const auto &v : obj[key]) {
      if (!v.is_string()) throw LoadError(where + ": non-string in " + key, 0);
      out.push_back(v.get<std::string>());
    }
    return out;
  };

  Diagnostics d;
  d.lexicon_ = &lexicon;
  std::set<std::string> ids;
  for (const auto &c : doc["checklists"]) {
    DiagnosticChecklist cl;
    cl.id = str(c, "id", "checklist");
    const std::string where = "checklist " + cl.id;
    if (!ids.insert(cl.id).second) throw LoadError(where + ": duplicate id", 0);
    cl.title = str(c, "title", where);
    cl.anchor = str(c, "anchor", where);
    cl.lemmas = str_list(c, "lemmas", where);
    cl.labels = str_list(c, "labels", where);
    cl.prompts = str_list(c, "prompts", where);
    if (cl.prompts.empty()) throw LoadError(where + ": no prompts", 0);
    for (auto &l : cl.lemmas) {
      if (lexicon.Lookup(l) == nullptr) {
        throw LoadError(where + ": unknown lemma " + l, 0, 0, "UNKNOWN_LEMMA");
      }
      l = NormalizeKey(l);
    }
    if (!c.contains("outcomes") || !c["outcomes"].is_object() ||
        c["outcomes"].empty()) {
      throw LoadError(where + ": missing outcomes", 0);
    }
    for (const auto &[path, o] : c["outcomes"].items()) {
      if (path.empty() || path.size() > cl.prompts.size() ||
          path.find_first_not_of("yn") != std::string::npos) {
        throw LoadError(where + ": bad answer path \"" + path + "\"", 0);
      }
      DiagnosticOutcome out;
      auto label = ConstrualLabel::Parse(str(o, "label", where));
      if (!label) throw LoadError(where + ": bad label for " + path, 0);
      out.construal = *label;
      if (o.contains("lemma")) out.lemma = NormalizeKey(str(o, "lemma", where));
      if (o.contains("note")) out.note = str(o, "note", where);
      std::vector<std::string> targets =
          out.lemma.empty() ? cl.lemmas : std::vector<std::string>{out.lemma};
      for (const auto &lemma : targets) {
        const LexEntry *e = lexicon.Lookup(lemma);
        if (e == nullptr || e->FindLicense(out.construal) == nullptr) {
          throw LoadError(where + ": outcome " + path + " (" +
                              out.construal.ToString() +
                              ") is not licensed for " + lemma,
                          0, 0, "UNLICENSED_CONSTRUAL");
        }
      }
      cl.outcomes.emplace(path, std::move(out));
    }
    d.checklists_.push_back(std::move(cl));
  }
  return d;
}

Diagnostics Diagnostics::LoadFile(const std::filesystem::path &path,
                                  const Lexicon &lexicon) {
  return Load(text::ReadFile(path), lexicon);
}

std::vector<const DiagnosticChecklist *> Diagnostics::For(
    std::string_view key) const {
  std::string lemma = NormalizeKey(key);
  if (lexicon_ && lexicon_->Lookup(lemma) == nullptr) {
    std::vector<std::string> tokens;
    for (auto part : text::Split(lemma, '_')) tokens.emplace_back(part);
    if (auto resolved = lexicon_->NormalizeSurface(tokens)) lemma = *resolved;
  }
  std::vector<const DiagnosticChecklist *> out;
  for (const auto &c : checklists_) {
    bool hit = std::find(c.lemmas.begin(), c.lemmas.end(), lemma) !=
                   c.lemmas.end() ||
               std::find(c.labels.begin(), c.labels.end(), key) !=
                   c.labels.end();
    if (hit) out.push_back(&c);
  }
  return out;
}

const DiagnosticChecklist *Diagnostics::Find(std::string_view id) const {
  for (const auto &c : checklists_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace snacs
