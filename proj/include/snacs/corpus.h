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

#ifndef SNACS_CORPUS_H_
#define SNACS_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "snacs/error.h"
#include "snacs/matcher.h"
#include "snacs/validator.h"

namespace snacs {

using Metadata = std::map<std::string, std::string>;

struct Document {
  std::string id;
  std::int64_t version = 0;
  Metadata metadata;
  std::vector<Sentence> sentences;
  // Keyed by sentence id.
  std::map<std::string, Metadata> sentence_metadata;
  std::vector<AnnotationRecord> records;

  const Sentence *FindSentence(std::string_view sentence_id) const;
  bool operator==(const Document &) const = default;
};

// Block format, one document per "# newdoc id = ..." header:
//
//   # newdoc id = D
//   # version = 3
//   # key = value            document metadata
//
//   # sent_id = S
//   # key = value            sentence metadata
//   0<TAB>token
//   1<TAB>token
//   @ 1<TAB>lemma<TAB>Scene↝Function<TAB>annotator<TAB>draft|confirmed
//
// Other '#' lines are comments and are dropped. Throws LoadError with line
// and column on any violation; out-of-range record indices carry the code
// MALFORMED_TARGET.
std::vector<Document> ParseCorpus(std::string_view data);
std::vector<Document> ParseCorpusFile(const std::filesystem::path &path);

// Canonical text. Records are sorted and lemma keys normalized, so
// ParseCorpus(SerializeCorpus(d)) == Canonicalize(d).
std::string SerializeCorpus(const std::vector<Document> &docs);
std::string SerializeDocument(const Document &doc);
Document Canonicalize(Document doc);

struct StatsReport {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t records = 0;
  // lemma -> construal text -> count
  std::map<std::string, std::map<std::string, std::size_t>> per_lemma;
  // construal text -> count
  std::map<std::string, std::size_t> per_label;
  std::size_t congruent = 0;
  std::size_t construed = 0;
  // Matched targets with no record on the same indices. Zero without a
  // matcher.
  std::size_t unannotated_targets = 0;

  double congruent_ratio() const {
    return records == 0 ? 0.0 : static_cast<double>(congruent) / records;
  }
  std::size_t LemmaTotal(const std::string &lemma) const;
  // Ties go to the smaller key. Empty when there are no records.
  std::string MostFrequentLemma() const;
};

StatsReport ComputeStats(const std::vector<Document> &docs,
                         const Matcher *matcher = nullptr);

class VersionConflict : public Error {
 public:
  VersionConflict(const std::string &id, std::int64_t current,
                  std::int64_t expected)
      : Error("document " + id + " is at version " + std::to_string(current) +
              ", write expected " + std::to_string(expected)),
        current_(current) {}
  std::int64_t current() const { return current_; }

 private:
  std::int64_t current_;
};

// Directory of `<id>.tsv` files, one document each. Readers get immutable
// snapshots; writers replace whole documents under a version check.
class DocumentStore {
 public:
  // Loads every *.tsv file in `dir`. Throws LoadError on a bad file.
  explicit DocumentStore(std::filesystem::path dir);

  static bool IsValidId(std::string_view id);

  std::vector<std::string> Ids() const;
  std::shared_ptr<const Document> Get(std::string_view id) const;
  std::vector<std::shared_ptr<const Document>> All() const;

  // `expected_version` is the version the writer last read (0 for a new
  // document). Returns the stored snapshot with the bumped version.
  // Throws VersionConflict or Error (bad id, I/O failure).
  std::shared_ptr<const Document> Put(Document doc,
                                      std::int64_t expected_version);

  const std::filesystem::path &dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<const Document>, std::less<>> docs_;
};

}  // namespace snacs

#endif  // SNACS_CORPUS_H_
