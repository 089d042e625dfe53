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

#ifndef SNACS_VALIDATOR_H_
#define SNACS_VALIDATOR_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snacs/hierarchy.h"
#include "snacs/lexicon.h"
#include "snacs/matcher.h"

namespace snacs {

enum class Status { kDraft, kConfirmed };

std::string_view StatusName(Status status);
std::optional<Status> ParseStatus(std::string_view name);

struct AnnotationRecord {
  std::string sentence_id;
  AdpositionTarget target;
  ConstrualLabel construal;
  std::string annotator;
  Status status = Status::kDraft;

  bool operator==(const AnnotationRecord &) const = default;
};

enum class Severity { kError, kWarning };

std::string_view SeverityName(Severity severity);

namespace codes {
inline constexpr std::string_view kUnknownLabel = "UNKNOWN_LABEL";
inline constexpr std::string_view kUnknownLemma = "UNKNOWN_LEMMA";
inline constexpr std::string_view kUnlicensedConstrual = "UNLICENSED_CONSTRUAL";
inline constexpr std::string_view kNovelScene = "NOVEL_SCENE";
inline constexpr std::string_view kMalformedTarget = "MALFORMED_TARGET";
inline constexpr std::string_view kSurfaceMismatch = "SURFACE_MISMATCH";
inline constexpr std::string_view kOverlap = "OVERLAP";
inline constexpr std::string_view kDuplicate = "DUPLICATE";
inline constexpr std::string_view kUnknownSentence = "UNKNOWN_SENTENCE";
}  // namespace codes

// Closed set of issue codes.
const std::vector<std::string_view> &IssueCodes();
bool IsIssueCode(std::string_view code);

struct ValidationIssue {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  std::string anchor;
  // "sentence@i,j" or empty.
  std::string location;

  bool operator==(const ValidationIssue &) const = default;
};

bool HasErrors(const std::vector<ValidationIssue> &issues);

// "s1@1,3".
std::string TargetLocation(const std::string &sentence_id,
                           const AdpositionTarget &target);

struct Suggestion {
  ConstrualLabel construal;
  int rank = 0;
  std::string anchor;
  std::string condition;
  bool provisional = false;
};

struct SuggestResult {
  std::vector<Suggestion> candidates;
  std::vector<ValidationIssue> issues;
};

class Validator {
 public:
  Validator(const Hierarchy &hierarchy, const Lexicon &lexicon)
      : hierarchy_(hierarchy), lexicon_(lexicon) {}

  // Per-record checks. With a sentence, bounds and surface are checked too.
  std::vector<ValidationIssue> Validate(const AnnotationRecord &record,
                                        const Sentence *sentence = nullptr) const;

  // Per-record checks plus OVERLAP and DUPLICATE across records.
  std::vector<ValidationIssue> ValidateDocument(
      const std::vector<AnnotationRecord> &records,
      const std::vector<Sentence> &sentences) const;

  // All licenses of the target's lemma ordered by rank, then label.
  SuggestResult Suggest(const AdpositionTarget &target) const;

 private:
  const Hierarchy &hierarchy_;
  const Lexicon &lexicon_;
};

struct DiagnosticOutcome {
  std::string lemma;  // empty: applies to every lemma of the checklist
  ConstrualLabel construal;
  std::string note;
};

struct DiagnosticChecklist {
  std::string id;
  std::string title;
  std::string anchor;
  std::vector<std::string> lemmas;
  std::vector<std::string> labels;
  std::vector<std::string> prompts;
  // Keyed by answer path, one 'y' or 'n' per prompt answered.
  std::map<std::string, DiagnosticOutcome> outcomes;

  // Outcome for an answer path, if registered.
  const DiagnosticOutcome *Evaluate(std::string_view answers) const;
};

class Diagnostics {
 public:
  // JSON document with a "checklists" array. Throws LoadError when a field is
  // missing or an outcome is not licensed for its lemma.
  static Diagnostics Load(std::string_view json_text, const Lexicon &lexicon);
  static Diagnostics LoadFile(const std::filesystem::path &path,
                              const Lexicon &lexicon);

  // Checklists registered for a lemma (any surface) or a label, in file order.
  std::vector<const DiagnosticChecklist *> For(std::string_view key) const;
  const DiagnosticChecklist *Find(std::string_view id) const;

  const std::vector<DiagnosticChecklist> &checklists() const {
    return checklists_;
  }

 private:
  std::vector<DiagnosticChecklist> checklists_;
  const Lexicon *lexicon_ = nullptr;
};

}  // namespace snacs

#endif  // SNACS_VALIDATOR_H_
