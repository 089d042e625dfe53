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

#include "snacs/translit.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <cstdio>
#include <optional>

#include "snacs/error.h"
#include "text_util.h"

namespace snacs {

namespace {

constexpr char32_t kNukta = 0x093C;
constexpr char32_t kVirama = 0x094D;
constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;

const icu::Normalizer2 &Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw Error("ICU NFC normalizer unavailable");
  }
  return *nfc;
}

std::u32string ToU32(std::string_view utf8) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  std::u32string out;
  for (int32_t i = 0; i < us.length();) {
    UChar32 c = us.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

std::string ToUtf8(const std::u32string &s) {
  icu::UnicodeString us;
  for (char32_t c : s) us.append(static_cast<UChar32>(c));
  std::string out;
  us.toUTF8String(out);
  return out;
}

std::u32string NfcU32(std::string_view utf8) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = Nfc().normalize(us, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return ToU32(out);
}

const char *Consonant(char32_t c) {
  switch (c) {
    case 0x0915: return "k";
    case 0x0916: return "kh";
    case 0x0917: return "g";
    case 0x0918: return "gh";
    case 0x0919: return "ṅ";
    case 0x091A: return "c";
    case 0x091B: return "ch";
    case 0x091C: return "j";
    case 0x091D: return "jh";
    case 0x091E: return "ñ";
    case 0x091F: return "ṭ";
    case 0x0920: return "ṭh";
    case 0x0921: return "ḍ";
    case 0x0922: return "ḍh";
    case 0x0923: return "ṇ";
    case 0x0924: return "t";
    case 0x0925: return "th";
    case 0x0926: return "d";
    case 0x0927: return "dh";
    case 0x0928: return "n";
    case 0x0929: return "n";
    case 0x092A: return "p";
    case 0x092B: return "ph";
    case 0x092C: return "b";
    case 0x092D: return "bh";
    case 0x092E: return "m";
    case 0x092F: return "y";
    case 0x0930: return "r";
    case 0x0931: return "r";
    case 0x0932: return "l";
    case 0x0933: return "ḷ";
    case 0x0934: return "ḻ";
    case 0x0935: return "v";
    case 0x0936: return "ś";
    case 0x0937: return "ṣ";
    case 0x0938: return "s";
    case 0x0939: return "h";
    default: return nullptr;
  }
}

// Consonant followed by a nukta.
const char *NuktaConsonant(char32_t c) {
  switch (c) {
    case 0x0915: return "q";
    case 0x0916: return "x";
    case 0x0917: return "ġ";
    case 0x091C: return "z";
    case 0x0921: return "ṛ";
    case 0x0922: return "ṛh";
    case 0x092B: return "f";
    case 0x092F: return "y";
    default: return nullptr;
  }
}

const char *IndependentVowel(char32_t c) {
  switch (c) {
    case 0x0905: return "a";
    case 0x0906: return "ā";
    case 0x0907: return "i";
    case 0x0908: return "ī";
    case 0x0909: return "u";
    case 0x090A: return "ū";
    case 0x090B: return "ṛ";
    case 0x0960: return "ṝ";
    case 0x090C: return "ḷ";
    case 0x0961: return "ḹ";
    case 0x090D: return "ĕ";
    case 0x090E: return "e";
    case 0x090F: return "e";
    case 0x0910: return "ai";
    case 0x0911: return "ŏ";
    case 0x0912: return "o";
    case 0x0913: return "o";
    case 0x0914: return "au";
    case 0x0972: return "ĕ";
    default: return nullptr;
  }
}

const char *VowelSign(char32_t c) {
  switch (c) {
    case 0x093E: return "ā";
    case 0x093F: return "i";
    case 0x0940: return "ī";
    case 0x0941: return "u";
    case 0x0942: return "ū";
    case 0x0943: return "ṛ";
    case 0x0944: return "ṝ";
    case 0x0962: return "ḷ";
    case 0x0963: return "ḹ";
    case 0x0945: return "ĕ";
    case 0x0946: return "e";
    case 0x0947: return "e";
    case 0x0948: return "ai";
    case 0x0949: return "ŏ";
    case 0x094A: return "o";
    case 0x094B: return "o";
    case 0x094C: return "au";
    default: return nullptr;
  }
}

bool IsNasalSign(char32_t c) { return c == 0x0900 || c == 0x0901 || c == 0x0902; }

bool IsWordChar(char32_t c) {
  return Consonant(c) || IndependentVowel(c) || VowelSign(c) ||
         IsNasalSign(c) || c == 0x0903 || c == kNukta || c == kVirama ||
         c == kZwj || c == kZwnj;
}

// Devanagari code points outside words that still have a mapping.
std::optional<std::string> StandaloneSign(char32_t c) {
  if (c >= 0x0966 && c <= 0x096F) return std::string(1, char('0' + (c - 0x0966)));
  switch (c) {
    case 0x0964: return ".";
    case 0x0965: return ".";
    case 0x093D: return "'";
    case 0x0950: return "om";
    case 0x0970: return ".";
    default: return std::nullopt;
  }
}

bool IsDevanagari(char32_t c) { return c >= 0x0900 && c <= 0x097F; }

enum class VowelKind { kInherent, kExplicit, kNone };

struct Syllable {
  std::vector<std::string> consonants;
  VowelKind kind = VowelKind::kInherent;
  std::string vowel;
  bool nasal = false;
  bool visarga = false;
  bool deleted = false;

  bool Live() const {
    return kind == VowelKind::kExplicit ||
           (kind == VowelKind::kInherent && !deleted);
  }
};

std::vector<Syllable> Parse(const std::u32string &word) {
  std::vector<Syllable> out;
  bool pending_conjunct = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char32_t c = word[i];
    if (c == kZwj || c == kZwnj) continue;
    if (const char *cons = Consonant(c)) {
      std::string roman = cons;
      if (i + 1 < word.size() && word[i + 1] == kNukta) {
        if (const char *nk = NuktaConsonant(c)) roman = nk;
        ++i;
      }
      if (pending_conjunct && !out.empty()) {
        out.back().consonants.push_back(roman);
        out.back().kind = VowelKind::kInherent;
      } else {
        Syllable s;
        s.consonants.push_back(roman);
        out.push_back(std::move(s));
      }
      pending_conjunct = false;
      continue;
    }
    pending_conjunct = false;
    if (const char *v = IndependentVowel(c)) {
      Syllable s;
      s.kind = VowelKind::kExplicit;
      s.vowel = v;
      out.push_back(std::move(s));
    } else if (const char *m = VowelSign(c)) {
      if (out.empty() || out.back().consonants.empty() ||
          out.back().kind != VowelKind::kInherent) {
        // Stray matra: treat it as an independent vowel.
        Syllable s;
        s.kind = VowelKind::kExplicit;
        s.vowel = m;
        out.push_back(std::move(s));
      } else {
        out.back().kind = VowelKind::kExplicit;
        out.back().vowel = m;
      }
    } else if (c == kVirama) {
      if (!out.empty() && !out.back().consonants.empty()) {
        out.back().kind = VowelKind::kNone;
        pending_conjunct = true;
      }
    } else if (IsNasalSign(c)) {
      if (out.empty()) {
        Syllable s;
        s.kind = VowelKind::kNone;
        out.push_back(std::move(s));
      }
      out.back().nasal = true;
    } else if (c == 0x0903) {
      if (out.empty()) {
        Syllable s;
        s.kind = VowelKind::kNone;
        out.push_back(std::move(s));
      }
      out.back().visarga = true;
    }
  }
  return out;
}

bool Deletable(const Syllable &s) {
  return s.kind == VowelKind::kInherent && !s.nasal && !s.visarga &&
         !s.consonants.empty();
}

void DeleteSchwas(std::vector<Syllable> &syl) {
  const std::size_t n = syl.size();
  if (n < 2) return;
  if (Deletable(syl[n - 1])) syl[n - 1].deleted = true;
  for (std::size_t i = n - 1; i-- > 1;) {
    Syllable &cur = syl[i];
    if (!Deletable(cur) || cur.consonants.size() != 1) continue;
    const Syllable &prev = syl[i - 1];
    const Syllable &next = syl[i + 1];
    if (!prev.Live()) continue;
    if (next.consonants.size() != 1 || !next.Live()) continue;
    cur.deleted = true;
  }
}

std::string Render(const std::vector<Syllable> &syl) {
  std::string out;
  for (const auto &s : syl) {
    for (const auto &c : s.consonants) out += c;
    if (s.kind == VowelKind::kInherent && !s.deleted) {
      out += "a";
    } else if (s.kind == VowelKind::kExplicit) {
      out += s.vowel;
    }
    if (s.nasal) out += "ṁ";
    if (s.visarga) out += "ḥ";
  }
  return out;
}

std::string CodePointName(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
  return buf;
}

}  // namespace

void Transliterator::LoadExceptions(std::string_view data) {
  int line_no = 0;
  for (std::string_view line : text::SplitLines(data)) {
    ++line_no;
    std::string_view body = text::Trim(text::StripComment(line));
    if (body.empty()) continue;
    auto fields = text::Split(body, '\t');
    if (fields.size() != 2) {
      throw LoadError("expected devanagari-form<TAB>romanization", line_no);
    }
    auto key = text::Trim(fields[0]);
    auto value = text::Trim(fields[1]);
    if (key.empty() || value.empty()) throw LoadError("empty field", line_no);
    if (!text::IsValidUtf8(key) || !text::IsValidUtf8(value)) {
      throw LoadError("invalid UTF-8", line_no);
    }
    exceptions_[NfcU32(key)] = ComposeNfc(value);
  }
}

Transliterator Transliterator::WithExceptionsFile(
    const std::filesystem::path &path) {
  Transliterator t;
  t.LoadExceptions(text::ReadFile(path));
  return t;
}

std::string Transliterator::RomanizeWord(const std::u32string &word) const {
  auto it = exceptions_.find(word);
  if (it != exceptions_.end()) return it->second;
  auto syllables = Parse(word);
  DeleteSchwas(syllables);
  return Render(syllables);
}

RomanizedText Transliterator::ToIast(std::string_view input) const {
  RomanizedText result;
  std::u32string text;
  if (text::IsValidUtf8(input)) {
    text = NfcU32(input);
  } else {
    result.warnings.push_back("invalid UTF-8 replaced with U+FFFD");
    text = NfcU32(input);  // ICU substitutes U+FFFD
  }

  std::string out;
  std::u32string passthrough;
  auto flush_passthrough = [&] {
    if (!passthrough.empty()) {
      out += ToUtf8(passthrough);
      passthrough.clear();
    }
  };

  bool saw_native = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t c = text[i];
    if (IsWordChar(c) && c != kZwj && c != kZwnj) {
      flush_passthrough();
      std::size_t j = i;
      while (j < text.size() && IsWordChar(text[j])) ++j;
      out += RomanizeWord(text.substr(i, j - i));
      saw_native = true;
      i = j;
      continue;
    }
    if (IsDevanagari(c)) {
      saw_native = true;
      if (auto mapped = StandaloneSign(c)) {
        flush_passthrough();
        out += *mapped;
      } else {
        result.warnings.push_back("unmapped code point " + CodePointName(c));
        passthrough.push_back(c);
      }
      ++i;
      continue;
    }
    passthrough.push_back(c);
    ++i;
  }
  flush_passthrough();
  result.text = ComposeNfc(out);
  result.provenance = saw_native ? RomanizedText::Provenance::kNativeScript
                                 : RomanizedText::Provenance::kAlreadyRomanized;
  return result;
}

std::string ComposeNfc(std::string_view input) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(input.data(), static_cast<int32_t>(input.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = Nfc().normalize(us, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::string NormalizeKey(std::string_view input) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(input.data(), static_cast<int32_t>(input.size())));
  us.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = Nfc().normalize(us, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");

  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < composed.length();) {
    UChar32 c = composed.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !collapsed.isEmpty()) collapsed.append(UChar32('_'));
    pending_space = false;
    collapsed.append(c);
  }
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

}  // namespace snacs
