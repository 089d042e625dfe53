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

#ifndef SNACS_TRANSLIT_H_
#define SNACS_TRANSLIT_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace snacs {

// Romanized text. `text` is NFC-composed and holds no mapped Devanagari.
struct RomanizedText {
  enum class Provenance { kNativeScript, kAlreadyRomanized };

  std::string text;
  Provenance provenance = Provenance::kAlreadyRomanized;
  // Code points that were passed through without a mapping.
  std::vector<std::string> warnings;
};

// Devanagari to IAST-style romanization with Hindi schwa deletion.
//
// Anusvara and candrabindu both become "ṁ"; nukta consonants become
// q, x, ġ, z, f, ṛ, ṛh. The inherent vowel is dropped word-finally (for
// words of two or more syllables) and medially in a V C ə C V context,
// scanning right to left so that a deletion blocks its left neighbour.
// Whole-word exceptions override the rules.
class Transliterator {
 public:
  Transliterator() = default;

  // Reads `devanagari-form <TAB> romanization` lines; '#' starts a comment.
  // Throws LoadError.
  void LoadExceptions(std::string_view data);
  static Transliterator WithExceptionsFile(const std::filesystem::path &path);

  RomanizedText ToIast(std::string_view text) const;

  std::size_t exception_count() const { return exceptions_.size(); }

 private:
  std::string RomanizeWord(const std::u32string &word) const;

  std::map<std::u32string, std::string> exceptions_;
};

// Lowercases, composes to NFC and collapses internal whitespace runs to a
// single '_'. Leading and trailing whitespace is dropped. Idempotent.
std::string NormalizeKey(std::string_view text);

// NFC composition only.
std::string ComposeNfc(std::string_view text);

}  // namespace snacs

#endif  // SNACS_TRANSLIT_H_
