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

#include "snacs/json_codec.h"

#include <set>

namespace snacs {

namespace {

Json MetadataJson(const Metadata &m) {
  Json out = Json::object();
  for (const auto &[k, v] : m) out[k] = v;
  return out;
}

bool HasSpace(const std::string &s) {
  return s.find_first_of(" \t\r\n") != std::string::npos;
}

void ReadMetadata(const Json &j, const std::string &field, Metadata &out,
                  std::vector<FieldError> &errors) {
  if (!j.is_object()) {
    errors.push_back({field, "must be an object of strings"});
    return;
  }
  for (const auto &[k, v] : j.items()) {
    if (!v.is_string()) {
      errors.push_back({field + "." + k, "must be a string"});
      continue;
    }
    std::string value = v.get<std::string>();
    if (k.empty() || HasSpace(k) || k.find('=') != std::string::npos ||
        value.find('\n') != std::string::npos) {
      errors.push_back({field + "." + k, "unusable metadata key or value"});
      continue;
    }
    out[k] = value;
  }
}

}  // namespace

Json ToJson(const Hierarchy &hierarchy) {
  Json nodes = Json::array();
  for (const auto &n : hierarchy.nodes()) {
    nodes.push_back({{"name", n.name},
                     {"group", std::string(GroupName(n.group))},
                     {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
                     {"depth", n.depth},
                     {"placement_uncertain", n.placement_uncertain}});
  }
  return {{"nodes", nodes}, {"roots", hierarchy.roots()}};
}

Json ToJson(const LexEntry &e) {
  Json variants = Json::array();
  for (const auto &v : e.variants) {
    variants.push_back({{"pattern", v.Pattern()},
                        {"tokens", v.tokens},
                        {"kind", std::string(VariantKindName(v.kind))},
                        {"discontinuous", v.discontinuous()},
                        {"derived", v.derived}});
  }
  Json licenses = Json::array();
  for (const auto &l : e.licenses) {
    licenses.push_back({{"label", l.construal.ToString()},
                        {"scene", l.construal.scene},
                        {"function", l.construal.function},
                        {"anchor", l.anchor},
                        {"condition", l.condition},
                        {"rank", l.rank},
                        {"open_scene", l.open_scene},
                        {"provisional", l.provisional}});
  }
  return {{"lemma", e.lemma},
          {"category", std::string(CategoryName(e.category))},
          {"script_forms", e.script_forms},
          {"variants", variants},
          {"licenses", licenses},
          {"register_pair",
           e.register_pair ? Json(*e.register_pair) : Json(nullptr)},
          {"notes", e.notes}};
}

Json ToJson(const AdpositionTarget &t) {
  return {{"indices", t.token_indices},
          {"lemma", t.lemma},
          {"surface", t.surface},
          {"discontinuous", t.discontinuous()}};
}

Json ToJson(const ValidationIssue &i) {
  return {{"severity", std::string(SeverityName(i.severity))},
          {"code", i.code},
          {"message", i.message},
          {"anchor", i.anchor},
          {"location", i.location}};
}

Json ToJson(const Suggestion &s) {
  return {{"label", s.construal.ToString()},
          {"scene", s.construal.scene},
          {"function", s.construal.function},
          {"rank", s.rank},
          {"anchor", s.anchor},
          {"condition", s.condition},
          {"provisional", s.provisional}};
}

Json ToJson(const DiagnosticChecklist &c) {
  Json outcomes = Json::object();
  for (const auto &[path, o] : c.outcomes) {
    outcomes[path] = {{"lemma", o.lemma.empty() ? Json(nullptr) : Json(o.lemma)},
                      {"label", o.construal.ToString()},
                      {"note", o.note}};
  }
  return {{"id", c.id},         {"title", c.title},     {"anchor", c.anchor},
          {"lemmas", c.lemmas}, {"labels", c.labels},   {"prompts", c.prompts},
          {"outcomes", outcomes}};
}

Json ToJson(const Document &doc) {
  Json sentences = Json::array();
  for (const auto &s : doc.sentences) {
    Json meta = Json::object();
    auto it = doc.sentence_metadata.find(s.source_id);
    if (it != doc.sentence_metadata.end()) meta = MetadataJson(it->second);
    sentences.push_back(
        {{"id", s.source_id}, {"tokens", s.tokens}, {"metadata", meta}});
  }
  Json records = Json::array();
  for (const auto &r : doc.records) {
    records.push_back({{"sentence_id", r.sentence_id},
                       {"indices", r.target.token_indices},
                       {"lemma", r.target.lemma},
                       {"label", r.construal.ToString()},
                       {"annotator", r.annotator},
                       {"status", std::string(StatusName(r.status))}});
  }
  return {{"id", doc.id},
          {"version", doc.version},
          {"metadata", MetadataJson(doc.metadata)},
          {"sentences", sentences},
          {"records", records}};
}

Json ToJson(const StatsReport &r) {
  Json per_lemma = Json::object();
  for (const auto &[lemma, counts] : r.per_lemma) {
    Json c = Json::object();
    for (const auto &[label, n] : counts) c[label] = n;
    per_lemma[lemma] = c;
  }
  Json per_label = Json::object();
  for (const auto &[label, n] : r.per_label) per_label[label] = n;
  return {{"documents", r.documents},
          {"sentences", r.sentences},
          {"records", r.records},
          {"congruent", r.congruent},
          {"construed", r.construed},
          {"congruent_ratio", r.congruent_ratio()},
          {"unannotated_targets", r.unannotated_targets},
          {"most_frequent_lemma", r.MostFrequentLemma()},
          {"per_lemma", per_lemma},
          {"per_label", per_label}};
}

Document DocumentFromJson(const Json &j, std::vector<FieldError> &errors) {
  Document doc;
  if (!j.is_object()) {
    errors.push_back({"", "document must be a JSON object"});
    return doc;
  }
  if (j.contains("id")) {
    if (!j["id"].is_string() || j["id"].get<std::string>().empty() ||
        HasSpace(j["id"].get<std::string>())) {
      errors.push_back({"id", "must be a non-empty string without spaces"});
    } else {
      doc.id = j["id"].get<std::string>();
    }
  }
  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<std::int64_t>() < 0) {
      errors.push_back({"version", "must be a non-negative integer"});
    } else {
      doc.version = j["version"].get<std::int64_t>();
    }
  }
  if (j.contains("metadata")) {
    ReadMetadata(j["metadata"], "metadata", doc.metadata, errors);
  }

  std::set<std::string> sentence_ids;
  if (!j.contains("sentences") || !j["sentences"].is_array()) {
    errors.push_back({"sentences", "required array"});
  } else {
    for (std::size_t i = 0; i < j["sentences"].size(); ++i) {
      const Json &s = j["sentences"][i];
      const std::string f = "sentences[" + std::to_string(i) + "]";
      if (!s.is_object()) {
        errors.push_back({f, "must be an object"});
        continue;
      }
      Sentence sentence;
      if (!s.contains("id") || !s["id"].is_string() ||
          s["id"].get<std::string>().empty() ||
          HasSpace(s["id"].get<std::string>())) {
        errors.push_back({f + ".id", "must be a non-empty string without spaces"});
      } else {
        sentence.source_id = s["id"].get<std::string>();
        if (!sentence_ids.insert(sentence.source_id).second) {
          errors.push_back({f + ".id", "duplicate sentence id"});
        }
      }
      if (!s.contains("tokens") || !s["tokens"].is_array() ||
          s["tokens"].empty()) {
        errors.push_back({f + ".tokens", "must be a non-empty array"});
      } else {
        for (std::size_t k = 0; k < s["tokens"].size(); ++k) {
          const Json &t = s["tokens"][k];
          if (!t.is_string() || t.get<std::string>().empty() ||
              HasSpace(t.get<std::string>())) {
            errors.push_back({f + ".tokens[" + std::to_string(k) + "]",
                              "must be a non-empty string without spaces"});
          } else {
            sentence.tokens.push_back(t.get<std::string>());
          }
        }
      }
      if (s.contains("metadata")) {
        Metadata meta;
        ReadMetadata(s["metadata"], f + ".metadata", meta, errors);
        if (!meta.empty()) doc.sentence_metadata[sentence.source_id] = meta;
      }
      doc.sentences.push_back(std::move(sentence));
    }
  }

  if (j.contains("records")) {
    if (!j["records"].is_array()) {
      errors.push_back({"records", "must be an array"});
      return doc;
    }
    for (std::size_t i = 0; i < j["records"].size(); ++i) {
      const Json &r = j["records"][i];
      const std::string f = "records[" + std::to_string(i) + "]";
      if (!r.is_object()) {
        errors.push_back({f, "must be an object"});
        continue;
      }
      AnnotationRecord rec;
      auto str = [&](const char *key, std::string &out) {
        if (!r.contains(key) || !r[key].is_string() ||
            r[key].get<std::string>().empty() ||
            HasSpace(r[key].get<std::string>())) {
          errors.push_back({f + "." + key, "must be a non-empty string without spaces"});
          return false;
        }
        out = r[key].get<std::string>();
        return true;
      };
      str("sentence_id", rec.sentence_id);
      str("lemma", rec.target.lemma);
      str("annotator", rec.annotator);
      std::string label;
      if (str("label", label)) {
        auto parsed = ConstrualLabel::Parse(label);
        if (!parsed) {
          errors.push_back({f + ".label", "expected Label or Scene↝Function"});
        } else {
          rec.construal = *parsed;
        }
      }
      std::string status = "draft";
      if (r.contains("status")) str("status", status);
      if (auto st = ParseStatus(status)) {
        rec.status = *st;
      } else {
        errors.push_back({f + ".status", "must be draft or confirmed"});
      }
      if (!r.contains("indices") || !r["indices"].is_array() ||
          r["indices"].empty()) {
        errors.push_back({f + ".indices", "must be a non-empty array"});
      } else {
        for (const auto &v : r["indices"]) {
          if (!v.is_number_unsigned()) {
            errors.push_back({f + ".indices", "must hold non-negative integers"});
            break;
          }
          rec.target.token_indices.push_back(v.get<std::size_t>());
        }
      }
      doc.records.push_back(std::move(rec));
    }
  }
  return doc;
}

}  // namespace snacs
