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

#include "snacs/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

#include "snacs/translit.h"
#include "text_util.h"

namespace snacs {

namespace {

bool IsMetaKey(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

bool HasSpace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

template <typename T>
bool ParseInt(std::string_view s, T &out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> SurfaceOf(const Sentence &s,
                                   const std::vector<std::size_t> &indices) {
  std::vector<std::string> out;
  for (std::size_t i : indices) {
    if (i < s.tokens.size()) out.push_back(NormalizeKey(s.tokens[i]));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view data) : data_(data) {}

  std::vector<Document> Run() {
    if (!text::IsValidUtf8(data_)) {
      std::size_t bad = text::FirstInvalidUtf8(data_);
      int line = 1 + static_cast<int>(std::count(data_.begin(),
                                                 data_.begin() + bad, '\n'));
      throw LoadError("invalid UTF-8", line);
    }
    for (std::string_view raw : text::SplitLines(data_)) {
      ++line_;
      std::string_view line = raw;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (text::Trim(line).empty()) {
        EndSentence();
        continue;
      }
      if (line[0] == '#') {
        Comment(line);
      } else if (line[0] == '@') {
        Record(line);
      } else {
        Token(line);
      }
    }
    EndSentence();
    return std::move(docs_);
  }

 private:
  [[noreturn]] void Fail(const std::string &msg, int col = 0,
                         std::string code = "LOAD_ERROR") {
    throw LoadError(msg, line_, col, std::move(code));
  }

  Document &Doc() {
    if (docs_.empty()) Fail("content before '# newdoc id = ...'", 1);
    return docs_.back();
  }

  void EndSentence() {
    if (in_sentence_ && Doc().sentences.back().tokens.empty()) {
      Fail("sentence " + Doc().sentences.back().source_id + " has no tokens");
    }
    in_sentence_ = false;
    seen_record_ = false;
  }

  void Comment(std::string_view line) {
    if (line.size() < 2 || line[1] != ' ') return;
    std::string_view body = line.substr(2);
    std::size_t eq = body.find(" = ");
    if (eq == std::string_view::npos) return;
    std::string_view key = body.substr(0, eq);
    std::string_view value = text::Trim(body.substr(eq + 3));
    int value_col = static_cast<int>(eq + 6);

    if (key == "newdoc id") {
      EndSentence();
      if (value.empty() || HasSpace(value)) Fail("bad document id", value_col);
      if (!doc_ids_.insert(std::string(value)).second) {
        Fail("duplicate document id " + std::string(value), value_col);
      }
      docs_.emplace_back();
      docs_.back().id = std::string(value);
      sent_ids_.clear();
      return;
    }
    if (!IsMetaKey(key)) return;  // free comment
    Document &doc = Doc();
    if (key == "sent_id") {
      EndSentence();
      if (value.empty() || HasSpace(value)) Fail("bad sentence id", value_col);
      if (!sent_ids_.insert(std::string(value)).second) {
        Fail("duplicate sentence id " + std::string(value), value_col);
      }
      doc.sentences.push_back(Sentence{std::string(value), {}});
      doc.sentence_metadata.erase(std::string(value));
      in_sentence_ = true;
      return;
    }
    if (in_sentence_) {
      if (!doc.sentences.back().tokens.empty()) {
        Fail("sentence metadata after tokens", 1);
      }
      doc.sentence_metadata[doc.sentences.back().source_id][std::string(key)] =
          std::string(value);
      return;
    }
    if (!doc.sentences.empty()) {
      Fail("document metadata after the first sentence", 1);
    }
    if (key == "version") {
      if (!ParseInt(value, doc.version) || doc.version < 0) {
        Fail("version must be a non-negative integer", value_col);
      }
      return;
    }
    doc.metadata[std::string(key)] = std::string(value);
  }

  Sentence &CurrentSentence(int col) {
    if (!in_sentence_) Fail("line outside a sentence block", col);
    return Doc().sentences.back();
  }

  void Token(std::string_view line) {
    Sentence &s = CurrentSentence(1);
    if (seen_record_) Fail("token line after a record line", 1);
    auto fields = text::Split(line, '\t');
    if (fields.size() != 2) Fail("expected index<TAB>form", 1);
    std::size_t index = 0;
    if (!ParseInt(fields[0], index)) Fail("bad token index", 1);
    if (index != s.tokens.size()) {
      Fail("token index " + std::string(fields[0]) + ", expected " +
               std::to_string(s.tokens.size()),
           1);
    }
    int form_col = static_cast<int>(fields[0].size() + 2);
    if (fields[1].empty() || HasSpace(fields[1])) {
      Fail("token form must be non-empty without whitespace", form_col);
    }
    s.tokens.emplace_back(fields[1]);
  }

  void Record(std::string_view line) {
    Sentence &s = CurrentSentence(1);
    seen_record_ = true;
    if (line.size() < 2 || line[1] != ' ') Fail("expected '@ ' prefix", 1);
    auto fields = text::Split(line.substr(2), '\t');
    if (fields.size() != 5) {
      Fail("record needs 5 TAB-separated fields, got " +
               std::to_string(fields.size()),
           3);
    }
    std::vector<int> cols;
    int col = 3;
    for (auto f : fields) {
      cols.push_back(col);
      col += static_cast<int>(f.size()) + 1;
    }

    AnnotationRecord r;
    r.sentence_id = s.source_id;
    for (auto part : text::Split(fields[0], ',')) {
      std::size_t idx = 0;
      if (!ParseInt(part, idx)) Fail("bad token index list", cols[0]);
      if (!r.target.token_indices.empty() &&
          idx <= r.target.token_indices.back()) {
        Fail("token indices must be strictly increasing", cols[0],
             "MALFORMED_TARGET");
      }
      if (idx >= s.tokens.size()) {
        Fail("token index " + std::to_string(idx) + " past sentence end (" +
                 std::to_string(s.tokens.size()) + " tokens)",
             cols[0], "MALFORMED_TARGET");
      }
      r.target.token_indices.push_back(idx);
    }
    if (fields[1].empty() || HasSpace(fields[1])) Fail("bad lemma", cols[1]);
    r.target.lemma = NormalizeKey(fields[1]);
    r.target.surface = SurfaceOf(s, r.target.token_indices);
    auto label = ConstrualLabel::Parse(fields[2]);
    if (!label) Fail("bad construal label", cols[2]);
    r.construal = *label;
    if (fields[3].empty() || HasSpace(fields[3])) Fail("bad annotator", cols[3]);
    r.annotator = std::string(fields[3]);
    auto status = ParseStatus(fields[4]);
    if (!status) Fail("status must be draft or confirmed", cols[4]);
    r.status = *status;
    Doc().records.push_back(std::move(r));
  }

  std::string_view data_;
  int line_ = 0;
  std::vector<Document> docs_;
  std::set<std::string> doc_ids_;
  std::set<std::string> sent_ids_;
  bool in_sentence_ = false;
  bool seen_record_ = false;
};

std::string IndexList(const std::vector<std::size_t> &indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out;
}

}  // namespace

const Sentence *Document::FindSentence(std::string_view sentence_id) const {
  for (const auto &s : sentences) {
    if (s.source_id == sentence_id) return &s;
  }
  return nullptr;
}

std::vector<Document> ParseCorpus(std::string_view data) {
  return Parser(data).Run();
}

std::vector<Document> ParseCorpusFile(const std::filesystem::path &path) {
  return ParseCorpus(text::ReadFile(path));
}

Document Canonicalize(Document doc) {
  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    order.emplace(doc.sentences[i].source_id, i);
  }
  for (auto &r : doc.records) {
    r.target.lemma = NormalizeKey(r.target.lemma);
    if (const Sentence *s = doc.FindSentence(r.sentence_id)) {
      r.target.surface = SurfaceOf(*s, r.target.token_indices);
    }
  }
  auto key = [&](const AnnotationRecord &r) {
    auto it = order.find(r.sentence_id);
    std::size_t pos = it == order.end() ? order.size() : it->second;
    return std::make_tuple(pos, r.target.token_indices, r.annotator,
                           r.target.lemma, r.construal.ToString(),
                           static_cast<int>(r.status));
  };
  std::stable_sort(doc.records.begin(), doc.records.end(),
                   [&](const auto &a, const auto &b) { return key(a) < key(b); });
  for (auto &[k, v] : doc.metadata) v = std::string(text::Trim(v));
  for (auto &[sid, meta] : doc.sentence_metadata) {
    for (auto &[k, v] : meta) v = std::string(text::Trim(v));
  }
  for (auto it = doc.sentence_metadata.begin();
       it != doc.sentence_metadata.end();) {
    if (it->second.empty() || !order.count(it->first)) {
      it = doc.sentence_metadata.erase(it);
    } else {
      ++it;
    }
  }
  return doc;
}

std::string SerializeDocument(const Document &input) {
  Document doc = Canonicalize(input);
  std::string out = "# newdoc id = " + doc.id + "\n";
  out += "# version = " + std::to_string(doc.version) + "\n";
  for (const auto &[k, v] : doc.metadata) out += "# " + k + " = " + v + "\n";

  std::map<std::string, std::vector<const AnnotationRecord *>> by_sentence;
  for (const auto &r : doc.records) {
    if (!doc.FindSentence(r.sentence_id)) {
      throw Error("record references unknown sentence " + r.sentence_id);
    }
    by_sentence[r.sentence_id].push_back(&r);
  }
  for (const auto &s : doc.sentences) {
    out += "\n# sent_id = " + s.source_id + "\n";
    auto meta = doc.sentence_metadata.find(s.source_id);
    if (meta != doc.sentence_metadata.end()) {
      for (const auto &[k, v] : meta->second) {
        out += "# " + k + " = " + v + "\n";
      }
    }
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      out += std::to_string(i) + "\t" + s.tokens[i] + "\n";
    }
    for (const AnnotationRecord *r : by_sentence[s.source_id]) {
      out += "@ " + IndexList(r->target.token_indices) + "\t" +
             r->target.lemma + "\t" + r->construal.ToString() + "\t" +
             r->annotator + "\t" + std::string(StatusName(r->status)) + "\n";
    }
  }
  return out;
}

std::string SerializeCorpus(const std::vector<Document> &docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out += "\n";
    out += SerializeDocument(docs[i]);
  }
  return out;
}

std::size_t StatsReport::LemmaTotal(const std::string &lemma) const {
  auto it = per_lemma.find(lemma);
  if (it == per_lemma.end()) return 0;
  std::size_t n = 0;
  for (const auto &[label, count] : it->second) n += count;
  return n;
}

std::string StatsReport::MostFrequentLemma() const {
  std::string best;
  std::size_t best_count = 0;
  for (const auto &[lemma, counts] : per_lemma) {
    std::size_t n = LemmaTotal(lemma);
    if (n > best_count) {
      best = lemma;
      best_count = n;
    }
  }
  return best;
}

StatsReport ComputeStats(const std::vector<Document> &docs,
                         const Matcher *matcher) {
  StatsReport report;
  report.documents = docs.size();
  for (const auto &doc : docs) {
    report.sentences += doc.sentences.size();
    for (const auto &r : doc.records) {
      ++report.records;
      std::string label = r.construal.ToString();
      ++report.per_lemma[NormalizeKey(r.target.lemma)][label];
      ++report.per_label[label];
      if (r.construal.congruent()) {
        ++report.congruent;
      } else {
        ++report.construed;
      }
    }
    if (matcher == nullptr) continue;
    for (const auto &s : doc.sentences) {
      std::set<std::vector<std::size_t>> annotated;
      for (const auto &r : doc.records) {
        if (r.sentence_id == s.source_id) {
          annotated.insert(r.target.token_indices);
        }
      }
      for (const auto &t : matcher->FindTargets(s)) {
        if (!annotated.count(t.token_indices)) ++report.unannotated_targets;
      }
    }
  }
  return report;
}

DocumentStore::DocumentStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) {
    throw Error("corpus directory not found: " + dir_.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsv" &&
        entry.path().filename().string()[0] != '.') {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto &path : files) {
    std::vector<Document> docs;
    try {
      docs = ParseCorpusFile(path);
    } catch (const LoadError &e) {
      throw LoadError(path.filename().string() + ": " + e.bare_message(),
                      e.line(), e.column(), e.code());
    }
    if (docs.size() != 1 || docs[0].id != path.stem().string()) {
      throw LoadError(path.filename().string() +
                          ": store files hold exactly one document named "
                          "after the file",
                      0);
    }
    auto doc = std::make_shared<const Document>(std::move(docs[0]));
    docs_.emplace(doc->id, std::move(doc));
  }
}

bool DocumentStore::IsValidId(std::string_view id) {
  return !id.empty() && id.size() <= 128 && id[0] != '.' && IsMetaKey(id);
}

std::vector<std::string> DocumentStore::Ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> ids;
  for (const auto &[id, doc] : docs_) ids.push_back(id);
  return ids;
}

std::shared_ptr<const Document> DocumentStore::Get(std::string_view id) const {
  std::shared_lock lock(mu_);
  auto it = docs_.find(id);
  return it == docs_.end() ? nullptr : it->second;
}

std::vector<std::shared_ptr<const Document>> DocumentStore::All() const {
  std::shared_lock lock(mu_);
  std::vector<std::shared_ptr<const Document>> out;
  for (const auto &[id, doc] : docs_) out.push_back(doc);
  return out;
}

std::shared_ptr<const Document> DocumentStore::Put(
    Document doc, std::int64_t expected_version) {
  if (!IsValidId(doc.id)) throw Error("invalid document id: " + doc.id);
  std::unique_lock lock(mu_);
  auto it = docs_.find(doc.id);
  std::int64_t current = it == docs_.end() ? 0 : it->second->version;
  if (expected_version != current) {
    throw VersionConflict(doc.id, current, expected_version);
  }
  doc.version = current + 1;
  doc = Canonicalize(std::move(doc));
  const std::string body = SerializeDocument(doc);

  static thread_local std::mt19937_64 rng{std::random_device{}()};
  const auto final_path = dir_ / (doc.id + ".tsv");
  const auto tmp_path =
      dir_ / ("." + doc.id + ".tmp" + std::to_string(rng() % 1000000007));
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp_path.string());
    out << body;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp_path);
      throw Error("write failed: " + tmp_path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp_path);
    throw Error("cannot replace " + final_path.string() + ": " + ec.message());
  }
  auto snapshot = std::make_shared<const Document>(std::move(doc));
  docs_[snapshot->id] = snapshot;
  return snapshot;
}

}  // namespace snacs
