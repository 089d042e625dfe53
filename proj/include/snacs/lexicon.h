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

#ifndef SNACS_LEXICON_H_
#define SNACS_LEXICON_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snacs/hierarchy.h"

namespace snacs {

enum class Category {
  kCaseMarker,
  kSimplePostposition,
  kComplexPostposition,
  kCircumposition,
  kAdverbPostposition,
  kParticle,
  kSuffix,
  kObliquePseudoMarker,
};

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);
// Lower is stronger. Used to break ties between lemmas sharing a surface.
int CategoryPriority(Category category);

enum class VariantKind {
  kCanonical,
  kInflection,
  kFusedPronoun,
  kContraction,
  kCircumpositionSplit,
};

std::string_view VariantKindName(VariantKind kind);
std::optional<VariantKind> ParseVariantKind(std::string_view name);

inline constexpr std::string_view kGapMarker = "…";

struct SurfaceVariant {
  std::vector<std::string> tokens;
  // Index of the token that may be preceded by intervening material.
  std::optional<std::size_t> gap_before;
  VariantKind kind = VariantKind::kCanonical;
  // Generated at load time rather than listed in the data file.
  bool derived = false;

  bool discontinuous() const { return gap_before.has_value(); }
  // "a+…+b" form.
  std::string Pattern() const;
  // Tokens joined by a single space, gap omitted.
  std::string Key() const;
};

struct License {
  ConstrualLabel construal;
  std::string anchor;
  std::string condition;
  int rank = 0;
  bool open_scene = false;
  bool provisional = false;
};

struct LexEntry {
  std::string lemma;
  Category category = Category::kCaseMarker;
  std::vector<std::string> script_forms;
  std::vector<SurfaceVariant> variants;
  // Ordered by rank, then label text.
  std::vector<License> licenses;
  std::optional<std::string> register_pair;
  // Distinct section anchors, in file order.
  std::vector<std::string> notes;

  const License *FindLicense(const ConstrualLabel &label) const;
  bool LicensesFunction(std::string_view function) const;
};

// A variant paired with its owning lemma.
struct VariantRef {
  std::string lemma;
  Category category;
  SurfaceVariant variant;
};

class Lexicon {
 public:
  // Table 1 layout.
  static constexpr std::array<std::string_view, 9> kTable1Functions = {
      "Circumstance", "Locus", "Source",    "Goal",    "Extent",
      "Time",         "StartTime", "EndTime", "Duration"};
  static constexpr std::array<std::string_view, 7> kTable1Columns = {
      "obl", "meṁ", "par", "se", "tak", "ko", "ke_liye"};

  // Throws LoadError (with the line number) on malformed rows, labels missing
  // from `hierarchy`, duplicate licenses, or broken entry invariants.
  static Lexicon Load(std::string_view data, const Hierarchy &hierarchy);
  static Lexicon LoadFile(const std::filesystem::path &path,
                          const Hierarchy &hierarchy);

  // Key-normalizes `lemma` first. nullptr when absent.
  const LexEntry *Lookup(std::string_view lemma) const;

  // Lemma owning exactly this token sequence (gap material excluded).
  std::optional<std::string> NormalizeSurface(
      const std::vector<std::string> &tokens) const;

  // Throws UnknownLemmaError.
  std::vector<ConstrualLabel> LicensedConstruals(std::string_view lemma) const;

  // One flag per kTable1Functions entry. `lemma` may be any surface of a
  // Table 1 column (pe, ke_lie). Throws Error for other lemmas.
  std::array<bool, 9> AllowedFunctions(std::string_view lemma) const;

  // Every variant whose first token is `token`.
  const std::vector<VariantRef> &VariantsStartingWith(
      std::string_view token) const;

  const std::map<std::string, LexEntry, std::less<>> &entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LexEntry, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> surface_index_;
  std::map<std::string, std::vector<VariantRef>, std::less<>> first_token_;
};

}  // namespace snacs

#endif  // SNACS_LEXICON_H_
