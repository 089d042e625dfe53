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

#include <random>

#include "doctest.h"
#include "test_util.h"
#include "text_util.h"

namespace snacs {
namespace {

const Transliterator &T() { return testing::SharedToolkit().transliterator(); }

bool HasDevanagari(const std::string &s) {
  // U+0900..U+097F encode as E0 A4 xx or E0 A5 xx.
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    auto a = static_cast<unsigned char>(s[i]);
    auto b = static_cast<unsigned char>(s[i + 1]);
    if (a == 0xE0 && (b == 0xA4 || b == 0xA5)) return true;
  }
  return false;
}

struct OracleRow {
  std::string devanagari, oracle, guideline, note;
};

std::vector<OracleRow> OracleRows() {
  std::vector<OracleRow> rows;
  const std::string data =
      testing::Slurp(testing::TestDataDir() / "translit_oracle.tsv");
  for (auto line : text::SplitLines(data)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = text::Split(line, '\t');
    REQUIRE(f.size() == 4);
    rows.push_back({std::string(f[0]), std::string(f[1]), std::string(f[2]),
                    std::string(f[3])});
  }
  return rows;
}

TEST_CASE("basic examples") {
  CHECK(T().ToIast("में").text == "meṁ");
  CHECK(T().ToIast("के बारे में").text == "ke bāre meṁ");
  CHECK(T().ToIast("").text.empty());
  CHECK(T().ToIast("").warnings.empty());
}

TEST_CASE("provenance") {
  CHECK(T().ToIast("घर").provenance == RomanizedText::Provenance::kNativeScript);
  CHECK(T().ToIast("ghar").provenance ==
        RomanizedText::Provenance::kAlreadyRomanized);
  CHECK(T().ToIast("ghar").text == "ghar");
}

TEST_CASE("schwa deletion") {
  CHECK(T().ToIast("समय").text == "samay");
  CHECK(T().ToIast("जानवर").text == "jānvar");
  CHECK(T().ToIast("लगभग").text == "lagbhag");
  CHECK(T().ToIast("कमरा").text == "kamrā");
  CHECK(T().ToIast("क").text == "ka");
}

TEST_CASE("nukta, nasal and sign mappings") {
  CHECK(T().ToIast("ख़िलाफ़").text == "xilāf");
  CHECK(T().ToIast("ग़ुस्सा").text == "ġussā");
  CHECK(T().ToIast("क़रीब").text == "qarīb");
  CHECK(T().ToIast("नज़दीक").text == "nazdīk");
  CHECK(T().ToIast("लड़के").text == "laṛke");
  CHECK(T().ToIast("हूँ").text == "hūṁ");
  CHECK(T().ToIast("दुःख").text == "duḥkh");
  CHECK(T().ToIast("२०२६।").text == "2026.");
}

TEST_CASE("non-Devanagari spans pass through") {
  CHECK(T().ToIast("abc घर 12!").text == "abc ghar 12!");
}

TEST_CASE("unknown Devanagari code points are flagged") {
  auto r = T().ToIast("घॕर");
  CHECK_FALSE(r.warnings.empty());
  CHECK(r.warnings[0].find("U+0955") != std::string::npos);
}

TEST_CASE("exceptions file overrides rules") {
  Transliterator plain;
  CHECK(plain.exception_count() == 0);
  Transliterator t;
  t.LoadExceptions("# c\nघर\tgharr\n");
  CHECK(t.exception_count() == 1);
  CHECK(t.ToIast("घर में").text == "gharr meṁ");
  CHECK(T().ToIast("पत्र").text == "patra");
  CHECK_THROWS_AS(t.LoadExceptions("घर\n"), LoadError);
}

TEST_CASE("oracle agreement on the word list") {
  auto rows = OracleRows();
  REQUIRE(rows.size() == 50);
  std::size_t agree = 0;
  for (const auto &r : rows) {
    CAPTURE(r.devanagari);
    std::string ours = T().ToIast(r.devanagari).text;
    CHECK(ours == r.guideline);
    if (ours == r.oracle) {
      ++agree;
    } else {
      CHECK_FALSE(r.note.empty());
    }
  }
  CHECK(agree * 100 >= rows.size() * 96);
}

TEST_CASE("lexicon script forms romanize to their lemma key") {
  for (const auto &[lemma, e] : testing::SharedToolkit().lexicon().entries()) {
    for (const auto &s : e.script_forms) {
      CAPTURE(s);
      CHECK(NormalizeKey(T().ToIast(s).text) == lemma);
    }
  }
}

TEST_CASE("normalize key") {
  CHECK(NormalizeKey("Ke  bāre meṁ") == "ke_bāre_meṁ");
  CHECK(NormalizeKey("ke_bāre_meṁ") == "ke_bāre_meṁ");
  CHECK(NormalizeKey("ā") == "ā");
  CHECK(NormalizeKey("  se\t ") == "se");
  CHECK(NormalizeKey("") == "");
  CHECK(ComposeNfc("ā") == "ā");
}

// Random strings over Devanagari letters, signs, ASCII and spaces.
std::string RandomText(std::mt19937 &rng) {
  static const std::vector<std::string> kAlphabet = {
      "क", "ख", "ग", "घ", "ङ", "च", "छ", "ज", "झ", "ञ", "ट", "ठ", "ड", "ढ",
      "ण", "त", "थ", "द", "ध", "न", "प", "फ", "ब", "भ", "म", "य", "र", "ल",
      "व", "श", "ष", "स", "ह", "अ", "आ", "इ", "ई", "उ", "ऊ", "ए", "ऐ", "ओ",
      "औ", "ा", "ि", "ी", "ु", "ू", "े", "ै", "ो", "ौ", "ं", "ँ", "ः", "्",
      "़", "ऑ", "ॉ", "।", "०", "९", " ", " ", "a", "Z", "-", "ṁ"};
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, kAlphabet.size() - 1);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i) s += kAlphabet[pick(rng)];
  return s;
}

TEST_CASE("property: total, deterministic, Devanagari-free, NFC-stable") {
  std::mt19937 rng(20261019);
  for (int i = 0; i < 2000; ++i) {
    std::string in = RandomText(rng);
    CAPTURE(in);
    auto a = T().ToIast(in);
    auto b = T().ToIast(in);
    CHECK(a.text == b.text);
    CHECK(a.warnings.empty());
    CHECK_FALSE(HasDevanagari(a.text));
    CHECK(ComposeNfc(a.text) == a.text);
    CHECK(text::IsValidUtf8(a.text));
  }
}

TEST_CASE("property: normalize key is idempotent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::string in = T().ToIast(RandomText(rng)).text + " Ā \t";
    std::string once = NormalizeKey(in);
    CHECK(NormalizeKey(once) == once);
    CHECK(once.find(' ') == std::string::npos);
  }
}

}  // namespace
}  // namespace snacs
