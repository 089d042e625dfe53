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

// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "snacs/corpus.h"
#include "snacs/service.h"
#include "text_util.h"

namespace snacs {
namespace {

const std::filesystem::path kData = SNACS_HI_DATA_DIR;
const std::filesystem::path kTestData = SNACS_HI_TEST_DATA_DIR;

constexpr double kTable1Seconds = 1.0;
constexpr double kGoldSeconds = 5.0;
constexpr double kTranslitAgreement = 0.96;

// Rows follow Lexicon::kTable1Functions, columns Lexicon::kTable1Columns.
constexpr bool kTable1[9][7] = {
    {0, 1, 1, 0, 0, 0, 1}, {0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 1, 1, 0}, {1, 0, 0, 0, 1, 0, 1}, {1, 1, 1, 0, 0, 1, 0},
    {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 1},
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Fmt(const char *fmt, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

Outcome Table1() {
  auto start = std::chrono::steady_clock::now();
  auto h = Hierarchy::LoadFile(kData / "hierarchy.tsv");
  auto lex = Lexicon::LoadFile(kData / "lexicon.tsv", h);
  int pos = 0, neg = 0, wrong = 0;
  for (std::size_t c = 0; c < Lexicon::kTable1Columns.size(); ++c) {
    auto row = lex.AllowedFunctions(Lexicon::kTable1Columns[c]);
    for (std::size_t f = 0; f < Lexicon::kTable1Functions.size(); ++f) {
      (row[f] ? pos : neg)++;
      wrong += row[f] != kTable1[f][c];
    }
  }
  double secs = Seconds(start);
  return {pos == 21 && neg == 42 && wrong == 0 && secs < kTable1Seconds,
          Fmt("positive=%.0f negative=%.0f deviations=%.0f", pos, neg, wrong) +
              Fmt(" time=%.3fs (limit %.0fs)", secs, kTable1Seconds)};
}

Outcome GoldSoundness(const Toolkit &tk) {
  auto start = std::chrono::steady_clock::now();
  auto docs = ParseCorpusFile(kData / "corpus" / "gold.tsv");
  std::size_t records = 0, discontinuous = 0, issues = 0;
  std::set<std::string> lemmas, roots, fused;
  for (const auto &d : docs) {
    issues += tk.validator().ValidateDocument(d.records, d.sentences).size();
    for (const auto &r : d.records) {
      ++records;
      lemmas.insert(r.target.lemma);
      discontinuous += r.target.discontinuous();
      if (tk.hierarchy().Contains(r.construal)) {
        roots.insert(tk.hierarchy().RootOf(r.construal.scene));
        roots.insert(tk.hierarchy().RootOf(r.construal.function));
      }
      if (const LexEntry *e = tk.lexicon().Lookup(r.target.lemma)) {
        for (const auto &v : e->variants) {
          if (v.kind == VariantKind::kFusedPronoun && v.tokens == r.target.surface) {
            fused.insert(v.Key());
          }
        }
      }
    }
  }
  double secs = Seconds(start);
  bool pass = records >= 60 && lemmas.size() >= 25 &&
              roots.size() == tk.hierarchy().roots().size() &&
              discontinuous >= 1 && fused.size() >= 3 && issues == 0 &&
              secs < kGoldSeconds;
  return {pass, Fmt("records=%.0f lemmas=%.0f roots=", records, lemmas.size()) +
                    std::to_string(roots.size()) + "/" +
                    std::to_string(tk.hierarchy().roots().size()) +
                    Fmt(" discontinuous=%.0f fused=%.0f issues=%.0f", discontinuous,
                        fused.size(), issues) +
                    Fmt(" time=%.3fs (limit %.0fs)", secs, kGoldSeconds)};
}

Outcome Mutation(const Toolkit &tk) {
  std::size_t generated = 0, rejected = 0;
  for (const auto &d : ParseCorpusFile(kData / "corpus" / "gold.tsv")) {
    for (const auto &r : d.records) {
      const LexEntry *e = tk.lexicon().Lookup(r.target.lemma);
      if (e == nullptr) continue;
      for (const auto &n : tk.hierarchy().nodes()) {
        if (e->LicensesFunction(n.name)) continue;
        AnnotationRecord m = r;
        m.construal.function = n.name;
        ++generated;
        rejected += HasErrors(tk.validator().Validate(m, d.FindSentence(r.sentence_id)));
      }
    }
  }
  double rate = generated ? 100.0 * rejected / generated : 0;
  return {generated > 0 && rejected == generated,
          Fmt("rejected %.0f/%.0f mutations (%.2f%%)", rejected, generated, rate)};
}

Outcome Recall(const Toolkit &tk) {
  std::size_t total = 0, found = 0, overlaps = 0;
  bool binā = false, bāre = false;
  for (const auto &d : ParseCorpusFile(kData / "corpus" / "gold.tsv")) {
    for (const auto &s : d.sentences) {
      auto targets = tk.matcher().FindTargets(s);
      for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
          overlaps += targets[i].Overlaps(targets[j]);
        }
      }
      for (const auto &r : d.records) {
        if (r.sentence_id != s.source_id) continue;
        ++total;
        for (const auto &t : targets) {
          if (t.token_indices == r.target.token_indices && t.lemma == r.target.lemma) {
            ++found;
            binā |= t.lemma == "ke_binā" && t.discontinuous();
            bāre |= t.lemma == "ke_bāre_meṁ" && t.token_indices.size() == 3;
            break;
          }
        }
      }
    }
  }
  return {total > 0 && found == total && overlaps == 0 && binā && bāre,
          Fmt("recovered %.0f/%.0f targets, overlapping outputs=%.0f", found, total,
              overlaps) +
              " ke_binā-split=" + (binā ? "yes" : "no") +
              " ke_bāre_meṁ-span=" + (bāre ? "yes" : "no")};
}

Outcome HierarchyIntegrity() {
  try {
    auto h = Hierarchy::LoadFile(kData / "hierarchy.tsv");
    std::size_t core = 0;
    bool forest = true;
    for (const auto &n : h.nodes()) {
      if (n.group != Group::kSpecial && n.group != Group::kContext) ++core;
      auto chain = h.Chain(n.name);
      forest &= std::set<std::string>(chain.begin(), chain.end()).size() == chain.size();
      forest &= static_cast<int>(chain.size()) == n.depth + 1;
      for (const auto &a : chain) forest &= h.Get(a).group == n.group;
    }
    bool focus = h.Contains("Focus") && h.Get("Focus").group == Group::kContext;
    bool discourse = h.Contains("`d") && h.Get("`d").group == Group::kSpecial;
    bool lca = h.Lca("Source", "Goal") == "Locus" &&
               h.Lca("StartTime", "EndTime") == "Time";
    return {forest && core >= 50 && focus && discourse && lca,
            Fmt("labels=%.0f core=%.0f", h.size(), core) +
                " Focus=" + (focus ? "yes" : "no") + " `d=" +
                (discourse ? "yes" : "no") + " lca(Source,Goal)=" +
                h.Lca("Source", "Goal") + " lca(StartTime,EndTime)=" +
                h.Lca("StartTime", "EndTime")};
  } catch (const Error &e) {
    return {false, e.what()};
  }
}

Outcome RoundTrip() {
  std::string raw = text::ReadFile(kData / "corpus" / "gold.tsv");
  auto docs = ParseCorpus(raw);
  std::string once = SerializeCorpus(docs);
  bool identity = ParseCorpus(once) == docs;
  bool idempotent = SerializeCorpus(ParseCorpus(once)) == once;
  return {identity && idempotent,
          std::string("parse(serialize(x))==x: ") + (identity ? "yes" : "no") +
              ", serialize idempotent: " + (idempotent ? "yes" : "no") +
              ", bytes=" + std::to_string(once.size())};
}

Outcome Translit(const Toolkit &tk) {
  std::string data = text::ReadFile(kTestData / "translit_oracle.tsv");
  std::string exceptions = text::ReadFile(kData / "translit_exceptions.tsv");
  std::size_t total = 0, agree = 0, undocumented = 0;
  for (auto line : text::SplitLines(data)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = text::Split(line, '\t');
    if (f.size() != 4) return {false, "malformed oracle row"};
    ++total;
    if (tk.transliterator().ToIast(f[0]).text == f[1]) {
      ++agree;
    } else if (f[3].empty() &&
               exceptions.find(std::string(f[0]) + "\t") == std::string::npos) {
      ++undocumented;
    }
  }
  double rate = total ? static_cast<double>(agree) / total : 0;
  return {total == 50 && rate >= kTranslitAgreement && undocumented == 0,
          Fmt("agreement %.0f/%.0f = %.1f%%", agree, total, 100 * rate) +
              Fmt(" (threshold %.0f%%), undocumented disagreements=%.0f",
                  100 * kTranslitAgreement, undocumented)};
}

}  // namespace
}  // namespace snacs

int main() {
  using namespace snacs;
  std::unique_ptr<Toolkit> tk;
  try {
    tk = Toolkit::Load(ToolkitPaths::InDirectory(kData));
  } catch (const std::exception &e) {
    std::printf("FAIL toolkit load: %s\n", e.what());
    return 1;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table1-matrix", [] { return Table1(); }},
      {"gold-soundness", [&] { return GoldSoundness(*tk); }},
      {"mutation-sensitivity", [&] { return Mutation(*tk); }},
      {"matcher-recall", [&] { return Recall(*tk); }},
      {"hierarchy-integrity", [] { return HierarchyIntegrity(); }},
      {"round-trip", [] { return RoundTrip(); }},
      {"translit-oracle", [&] { return Translit(*tk); }},
  };
  int failures = 0;
  for (const auto &[name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
