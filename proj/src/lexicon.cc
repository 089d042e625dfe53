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

#include "snacs/lexicon.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "snacs/error.h"
#include "snacs/translit.h"
#include "text_util.h"

namespace snacs {

namespace {

constexpr Category kAllCategories[] = {
    Category::kCaseMarker,         Category::kSimplePostposition,
    Category::kComplexPostposition, Category::kCircumposition,
    Category::kAdverbPostposition, Category::kParticle,
    Category::kSuffix,             Category::kObliquePseudoMarker,
};

constexpr VariantKind kAllKinds[] = {
    VariantKind::kCanonical,   VariantKind::kInflection,
    VariantKind::kFusedPronoun, VariantKind::kContraction,
    VariantKind::kCircumpositionSplit,
};

bool IsDash(std::string_view s) { return s == "-" || s.empty(); }

struct PendingEntry {
  LexEntry entry;
  int first_line = 0;
};

SurfaceVariant ParsePattern(std::string_view pattern, int line) {
  SurfaceVariant v;
  auto parts = text::Split(pattern, '+');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string_view part = text::Trim(parts[i]);
    if (part == kGapMarker) {
      if (v.gap_before) throw LoadError("more than one gap in variant", line, 3);
      if (i == 0 || i + 1 == parts.size()) {
        throw LoadError("gap at the edge of a variant", line, 3);
      }
      v.gap_before = v.tokens.size();
      continue;
    }
    std::string token = NormalizeKey(part);
    if (token.empty()) throw LoadError("empty variant token", line, 3);
    v.tokens.push_back(std::move(token));
  }
  return v;
}

std::vector<std::string> SplitLemma(const std::string &lemma) {
  std::vector<std::string> out;
  for (auto part : text::Split(lemma, '_')) out.emplace_back(part);
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> FusedForms(const LexEntry *entry,
                                    std::string_view ending) {
  std::vector<std::string> out;
  if (entry == nullptr) return out;
  for (const auto &v : entry->variants) {
    if (v.kind == VariantKind::kFusedPronoun && v.tokens.size() == 1 &&
        EndsWith(v.tokens[0], ending)) {
      out.push_back(v.tokens[0]);
    }
  }
  return out;
}

}  // namespace

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kCaseMarker: return "case-marker";
    case Category::kSimplePostposition: return "simple-postposition";
    case Category::kComplexPostposition: return "complex-postposition";
    case Category::kCircumposition: return "circumposition";
    case Category::kAdverbPostposition: return "adverb-postposition";
    case Category::kParticle: return "particle";
    case Category::kSuffix: return "suffix";
    case Category::kObliquePseudoMarker: return "oblique-pseudo-marker";
  }
  return "case-marker";
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (Category c : kAllCategories) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

int CategoryPriority(Category category) {
  switch (category) {
    case Category::kCaseMarker: return 0;
    case Category::kSimplePostposition: return 1;
    case Category::kComplexPostposition: return 2;
    case Category::kCircumposition: return 3;
    case Category::kAdverbPostposition: return 4;
    case Category::kParticle: return 5;
    case Category::kSuffix: return 6;
    case Category::kObliquePseudoMarker: return 7;
  }
  return 7;
}

std::string_view VariantKindName(VariantKind kind) {
  switch (kind) {
    case VariantKind::kCanonical: return "canonical";
    case VariantKind::kInflection: return "inflection";
    case VariantKind::kFusedPronoun: return "fused-pronoun";
    case VariantKind::kContraction: return "contraction";
    case VariantKind::kCircumpositionSplit: return "circumposition-split";
  }
  return "canonical";
}

std::optional<VariantKind> ParseVariantKind(std::string_view name) {
  for (VariantKind k : kAllKinds) {
    if (VariantKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string SurfaceVariant::Pattern() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += "+";
    if (gap_before && *gap_before == i) {
      out += kGapMarker;
      out += "+";
    }
    out += tokens[i];
  }
  return out;
}

std::string SurfaceVariant::Key() const { return text::Join(tokens, " "); }

const License *LexEntry::FindLicense(const ConstrualLabel &label) const {
  for (const auto &l : licenses) {
    if (l.construal == label) return &l;
  }
  return nullptr;
}

bool LexEntry::LicensesFunction(std::string_view function) const {
  return std::any_of(licenses.begin(), licenses.end(), [&](const License &l) {
    return l.construal.function == function;
  });
}

Lexicon Lexicon::Load(std::string_view data, const Hierarchy &hierarchy) {
  std::map<std::string, PendingEntry, std::less<>> pending;
  std::set<std::pair<std::string, std::string>> seen_licenses;
  std::vector<std::pair<std::string, int>> pair_refs;

  int line_no = 0;
  for (std::string_view line : text::SplitLines(data)) {
    ++line_no;
    std::string_view body = text::StripComment(line);
    if (text::Trim(body).empty()) continue;
    if (!text::IsValidUtf8(line)) throw LoadError("invalid UTF-8", line_no);
    auto fields = text::Split(body, '\t');
    if (fields.size() != 8 && fields.size() != 9) {
      throw LoadError("expected 8 or 9 TAB-separated fields, got " +
                          std::to_string(fields.size()),
                      line_no);
    }
    for (auto &f : fields) f = text::Trim(f);

    std::string lemma(fields[0]);
    if (lemma.empty() || NormalizeKey(lemma) != lemma) {
      throw LoadError("lemma is not a normalized key: " + lemma, line_no, 1);
    }
    auto category = ParseCategory(fields[1]);
    if (!category) {
      throw LoadError("unknown category: " + std::string(fields[1]), line_no, 2);
    }

    auto [it, inserted] = pending.try_emplace(lemma);
    PendingEntry &pe = it->second;
    if (inserted) {
      pe.entry.lemma = lemma;
      pe.entry.category = *category;
      pe.first_line = line_no;
    } else if (pe.entry.category != *category) {
      throw LoadError("category differs from earlier rows of " + lemma,
                      line_no, 2);
    }

    std::string anchor(fields[5]);
    if (IsDash(anchor)) throw LoadError("missing section anchor", line_no, 6);
    if (std::find(pe.entry.notes.begin(), pe.entry.notes.end(), anchor) ==
        pe.entry.notes.end()) {
      pe.entry.notes.push_back(anchor);
    }

    License license;
    std::optional<VariantKind> kind;
    if (fields.size() == 9 && !IsDash(fields[8])) {
      for (auto flag : text::Split(fields[8], ',')) {
        flag = text::Trim(flag);
        if (flag == "open-scene") {
          license.open_scene = true;
        } else if (flag == "provisional") {
          license.provisional = true;
        } else if (flag.substr(0, 7) == "script=") {
          pe.entry.script_forms.emplace_back(flag.substr(7));
        } else if (flag.substr(0, 14) == "register_pair=") {
          pe.entry.register_pair = std::string(flag.substr(14));
          pair_refs.emplace_back(*pe.entry.register_pair, line_no);
        } else if (flag.substr(0, 5) == "kind=") {
          kind = ParseVariantKind(flag.substr(5));
          if (!kind || *kind == VariantKind::kCanonical) {
            throw LoadError("unknown variant kind: " + std::string(flag), line_no, 9);
          }
        } else {
          throw LoadError("unknown flag: " + std::string(flag), line_no, 9);
        }
      }
    }

    bool is_variant = !IsDash(fields[2]);
    if (is_variant) {
      if (!IsDash(fields[3]) || !IsDash(fields[4])) {
        throw LoadError("variant rows carry no construal", line_no, 4);
      }
      if (!kind) throw LoadError("variant row without kind=", line_no, 9);
      if (license.open_scene || license.provisional) {
        throw LoadError("license flags on a variant row", line_no, 9);
      }
      SurfaceVariant v = ParsePattern(fields[2], line_no);
      v.kind = *kind;
      pe.entry.variants.push_back(std::move(v));
      continue;
    }

    if (kind) throw LoadError("kind= on a license row", line_no, 9);
    if (IsDash(fields[3]) || IsDash(fields[4])) {
      throw LoadError("license row needs scene and function", line_no, 4);
    }
    license.construal = ConstrualLabel(std::string(fields[3]), std::string(fields[4]));
    if (!hierarchy.Contains(license.construal.scene)) {
      throw LoadError("unknown label: " + license.construal.scene, line_no, 4,
                      "UNKNOWN_LABEL");
    }
    if (!hierarchy.Contains(license.construal.function)) {
      throw LoadError("unknown label: " + license.construal.function, line_no, 5,
                      "UNKNOWN_LABEL");
    }
    if (!seen_licenses.emplace(lemma, license.construal.ToString()).second) {
      throw LoadError("duplicate license " + lemma + " " +
                          license.construal.ToString(),
                      line_no);
    }
    license.anchor = anchor;
    license.condition = IsDash(fields[6]) ? "" : std::string(fields[6]);
    auto rank_text = fields[7];
    auto [ptr, ec] = std::from_chars(rank_text.data(),
                                     rank_text.data() + rank_text.size(),
                                     license.rank);
    if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() ||
        license.rank < 0) {
      throw LoadError("rank must be a non-negative integer", line_no, 8);
    }
    pe.entry.licenses.push_back(std::move(license));
  }

  for (const auto &[target, line] : pair_refs) {
    if (!pending.count(target)) {
      throw LoadError("register_pair names unknown lemma " + target, line, 9);
    }
  }

  for (auto &[lemma, pe] : pending) {
    LexEntry &e = pe.entry;
    if (e.licenses.empty()) {
      throw LoadError("lemma " + lemma + " has no licenses", pe.first_line);
    }
    if (e.category != Category::kObliquePseudoMarker) {
      SurfaceVariant canonical;
      canonical.tokens = SplitLemma(lemma);
      e.variants.insert(e.variants.begin(), std::move(canonical));
    }
    bool any_gap = std::any_of(e.variants.begin(), e.variants.end(),
                               [](const SurfaceVariant &v) {
                                 return v.discontinuous();
                               });
    if (any_gap != (e.category == Category::kCircumposition)) {
      throw LoadError("lemma " + lemma +
                          ": circumposition category requires a discontinuous "
                          "variant and vice versa",
                      pe.first_line);
    }
    std::stable_sort(e.licenses.begin(), e.licenses.end(),
                     [](const License &a, const License &b) {
                       if (a.rank != b.rank) return a.rank < b.rank;
                       return a.construal.ToString() < b.construal.ToString();
                     });
  }

  // Pronoun + complex postposition fusions (tumhāre bāre meṁ, mujhse pahle).
  auto find = [&](std::string_view l) -> const LexEntry * {
    auto it = pending.find(l);
    return it == pending.end() ? nullptr : &it->second.entry;
  };
  const std::vector<std::pair<std::string, std::vector<std::string>>> heads = {
      {"ke", FusedForms(find("kā"), "e")},
      {"kī", FusedForms(find("kā"), "ī")},
      {"se", FusedForms(find("se"), "se")},
  };
  for (auto &[lemma, pe] : pending) {
    LexEntry &e = pe.entry;
    if (e.category != Category::kComplexPostposition &&
        e.category != Category::kCircumposition) {
      continue;
    }
    std::vector<SurfaceVariant> derived;
    for (const auto &v : e.variants) {
      if (v.discontinuous() || v.tokens.size() < 2) continue;
      for (const auto &[head, pronouns] : heads) {
        if (v.tokens[0] != head) continue;
        for (const auto &p : pronouns) {
          SurfaceVariant d = v;
          d.tokens[0] = p;
          d.kind = VariantKind::kFusedPronoun;
          d.derived = true;
          derived.push_back(std::move(d));
        }
      }
    }
    for (auto &d : derived) e.variants.push_back(std::move(d));
  }

  Lexicon lex;
  for (auto &[lemma, pe] : pending) {
    lex.entries_.emplace(lemma, std::move(pe.entry));
  }

  std::map<std::string, std::vector<const LexEntry *>> owners;
  for (const auto &[lemma, e] : lex.entries_) {
    for (const auto &v : e.variants) {
      auto &list = owners[v.Key()];
      if (std::find(list.begin(), list.end(), &e) == list.end()) {
        list.push_back(&e);
      }
      lex.first_token_[v.tokens.front()].push_back(
          VariantRef{lemma, e.category, v});
    }
  }
  for (auto &[key, list] : owners) {
    auto best = std::min_element(
        list.begin(), list.end(), [](const LexEntry *a, const LexEntry *b) {
          int pa = CategoryPriority(a->category);
          int pb = CategoryPriority(b->category);
          if (pa != pb) return pa < pb;
          return a->lemma < b->lemma;
        });
    lex.surface_index_.emplace(key, (*best)->lemma);
  }
  for (auto &[token, refs] : lex.first_token_) {
    std::stable_sort(refs.begin(), refs.end(),
                     [](const VariantRef &a, const VariantRef &b) {
                       if (a.variant.tokens.size() != b.variant.tokens.size()) {
                         return a.variant.tokens.size() > b.variant.tokens.size();
                       }
                       return a.lemma < b.lemma;
                     });
  }
  return lex;
}

Lexicon Lexicon::LoadFile(const std::filesystem::path &path,
                          const Hierarchy &hierarchy) {
  return Load(text::ReadFile(path), hierarchy);
}

const LexEntry *Lexicon::Lookup(std::string_view lemma) const {
  auto it = entries_.find(NormalizeKey(lemma));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> Lexicon::NormalizeSurface(
    const std::vector<std::string> &tokens) const {
  if (tokens.empty()) return std::nullopt;
  std::vector<std::string> keyed;
  keyed.reserve(tokens.size());
  for (const auto &t : tokens) keyed.push_back(NormalizeKey(t));
  auto it = surface_index_.find(text::Join(keyed, " "));
  if (it == surface_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ConstrualLabel> Lexicon::LicensedConstruals(
    std::string_view lemma) const {
  const LexEntry *e = Lookup(lemma);
  if (e == nullptr) throw UnknownLemmaError(std::string(lemma));
  std::vector<ConstrualLabel> out;
  for (const auto &l : e->licenses) out.push_back(l.construal);
  return out;
}

std::array<bool, 9> Lexicon::AllowedFunctions(std::string_view lemma) const {
  const LexEntry *e = Lookup(lemma);
  if (e == nullptr) {
    auto resolved = NormalizeSurface(SplitLemma(NormalizeKey(lemma)));
    if (resolved) e = Lookup(*resolved);
  }
  if (e == nullptr ||
      std::find(kTable1Columns.begin(), kTable1Columns.end(), e->lemma) ==
          kTable1Columns.end()) {
    throw Error("not a Table 1 column: " + std::string(lemma));
  }
  std::array<bool, 9> row{};
  for (std::size_t i = 0; i < kTable1Functions.size(); ++i) {
    row[i] = e->LicensesFunction(kTable1Functions[i]);
  }
  return row;
}

const std::vector<VariantRef> &Lexicon::VariantsStartingWith(
    std::string_view token) const {
  static const std::vector<VariantRef> kEmpty;
  auto it = first_token_.find(token);
  return it == first_token_.end() ? kEmpty : it->second;
}

}  // namespace snacs
