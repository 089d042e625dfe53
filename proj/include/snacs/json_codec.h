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

#ifndef SNACS_JSON_CODEC_H_
#define SNACS_JSON_CODEC_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "snacs/corpus.h"
#include "snacs/hierarchy.h"
#include "snacs/lexicon.h"
#include "snacs/matcher.h"
#include "snacs/validator.h"

namespace snacs {

using Json = nlohmann::json;

struct FieldError {
  std::string field;
  std::string message;
};

Json ToJson(const Hierarchy &hierarchy);
Json ToJson(const LexEntry &entry);
Json ToJson(const AdpositionTarget &target);
Json ToJson(const ValidationIssue &issue);
Json ToJson(const Suggestion &suggestion);
Json ToJson(const DiagnosticChecklist &checklist);
Json ToJson(const Document &doc);
Json ToJson(const StatsReport &report);

// Appends one FieldError per problem; the returned document is only
// meaningful when `errors` stayed empty.
Document DocumentFromJson(const Json &json, std::vector<FieldError> &errors);

}  // namespace snacs

#endif  // SNACS_JSON_CODEC_H_
