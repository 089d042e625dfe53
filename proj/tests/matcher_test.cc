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

#include "snacs/matcher.h"

#include <random>
#include <set>

#include "doctest.h"
#include "snacs/corpus.h"
#include "test_util.h"

namespace snacs {
namespace {

using Indices = std::vector<std::size_t>;

const Matcher &M() { return testing::SharedToolkit().matcher(); }

Sentence Words(std::vector<std::string> tokens) { return {"t", std::move(tokens)}; }

std::vector<std::pair<Indices, std::string>> Spans(
    const std::vector<AdpositionTarget> &targets) {
  std::vector<std::pair<Indices, std::string>> out;
  for (const auto &t : targets) out.emplace_back(t.token_indices, t.lemma);
  return out;
}

TEST_CASE("simple and multiword targets") {
  auto t = M().FindTargets(Words({"rām", "ke", "bāre", "meṁ", "bāt", "karo"}));
  REQUIRE(t.size() == 1);
  CHECK(t[0].token_indices == Indices{1, 2, 3});
  CHECK(t[0].lemma == "ke_bāre_meṁ");
  CHECK(t[0].surface == std::vector<std::string>{"ke", "bāre", "meṁ"});

  t = M().FindTargets(Words({"durghaṭnā", "meṁ", "do", "log"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{1}, "meṁ"}});
}

TEST_CASE("circumposition with intervening material") {
  auto t = M().FindTargets(Words({"āp", "binā", "ovan", "ke", "kek", "banā"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{1, 3}, "ke_binā"}});
  CHECK(t[0].discontinuous());
  t = M().FindTargets(Words({"ghar", "ke", "binā"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{1, 2}, "ke_binā"}});
}

TEST_CASE("gap bound is respected") {
  std::vector<std::string> tokens{"binā"};
  for (int i = 0; i < 5; ++i) tokens.push_back("x");
  tokens.push_back("ke");
  for (const auto &t : M().FindTargets(Words(tokens))) {
    CHECK(t.token_indices.size() == 1);
  }

  Matcher wide(testing::SharedToolkit().lexicon(), MatcherOptions{6});
  bool found = false;
  for (const auto &t : wide.FindTargets(Words(tokens))) {
    found |= t.token_indices == Indices{0, 6} && t.lemma == "ke_binā";
  }
  CHECK(found);
}

TEST_CASE("fused pronoun surfaces") {
  auto t = M().FindTargets(Words({"mujhe", "kitāb", "do"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{0}, "ko"}});
  t = M().FindTargets(Words({"usne", "khāyā"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{0}, "ne"}});
  t = M().FindTargets(Words({"tumhāre", "bāre", "meṁ"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{0, 1, 2}, "ke_bāre_meṁ"}});
}

TEST_CASE("hyphen-attached suffix") {
  auto t = M().FindTargets(Words({"choṭā-vālā", "lo"}));
  REQUIRE(t.size() == 1);
  CHECK(t[0].lemma == "vālā");
  CHECK(t[0].surface == std::vector<std::string>{"vālā"});
}

TEST_CASE("tokens are key-normalized before matching") {
  auto t = M().FindTargets(Words({"Ghar", "MEṀ"}));
  CHECK(Spans(t) == decltype(Spans(t)){{{1}, "meṁ"}});
  CHECK(M().FindTargets(Words({})).empty());
}

TEST_CASE("gold recall is exact") {
  auto docs = ParseCorpusFile(testing::GoldPath());
  std::size_t total = 0, found = 0;
  for (const auto &d : docs) {
    for (const auto &s : d.sentences) {
      auto targets = M().FindTargets(s);
      for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
          CHECK_FALSE(targets[i].Overlaps(targets[j]));
        }
      }
      for (const auto &r : d.records) {
        if (r.sentence_id != s.source_id) continue;
        ++total;
        bool hit = false;
        for (const auto &t : targets) {
          hit |= t.token_indices == r.target.token_indices &&
                 t.lemma == r.target.lemma;
        }
        CAPTURE(s.source_id);
        CHECK(hit);
        found += hit;
      }
    }
  }
  CHECK(total >= 60);
  CHECK(found == total);
}

// Random sentences built from adposition tokens and filler words.
Sentence RandomSentence(std::mt19937 &rng) {
  static const std::vector<std::string> kVocab = {
      "ke", "kī", "kā", "se", "meṁ", "par", "ko", "binā", "bāre", "bād", "liye",
      "dūr", "tak", "ghar", "rām", "mere", "tumhāre", "pahle", "sāth", "hī",
      "bhī", "vālā", "sā", "or", "cāroṁ", "jaise", "lie", "pe", "ne", "usne"};
  std::uniform_int_distribution<std::size_t> len(0, 14), pick(0, kVocab.size() - 1);
  Sentence s{"r", {}};
  for (std::size_t i = len(rng); i > 0; --i) s.tokens.push_back(kVocab[pick(rng)]);
  return s;
}

TEST_CASE("property: resolution is a maximal non-overlapping subset") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 3000; ++iter) {
    Sentence s = RandomSentence(rng);
    auto candidates = M().Candidates(s);
    auto chosen = M().FindTargets(s);
    CHECK(chosen == M().FindTargets(s));
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      CHECK(std::find(candidates.begin(), candidates.end(), chosen[i]) !=
            candidates.end());
      const auto &idx = chosen[i].token_indices;
      CHECK(std::is_sorted(idx.begin(), idx.end()));
      CHECK(idx.back() < s.tokens.size());
      if (i > 0) CHECK(chosen[i - 1].token_indices[0] < idx[0]);
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        CHECK_FALSE(chosen[i].Overlaps(chosen[j]));
      }
    }
    for (const auto &c : candidates) {
      bool blocked = false;
      for (const auto &t : chosen) blocked |= t == c || t.Overlaps(c);
      CHECK(blocked);
      for (std::size_t k = 1; k < c.token_indices.size(); ++k) {
        CHECK(c.token_indices[k] - c.token_indices[k - 1] - 1 <= M().options().max_gap);
      }
    }
  }
}

TEST_CASE("property: order of candidates does not change resolution") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    Sentence s = RandomSentence(rng);
    auto c = M().Candidates(s);
    auto expected = M().ResolveOverlaps(c);
    std::shuffle(c.begin(), c.end(), rng);
    CHECK(M().ResolveOverlaps(c) == expected);
  }
}

TEST_CASE("overlap helper") {
  AdpositionTarget a{{1, 3}, "x", {}}, b{{2}, "y", {}}, c{{3, 4}, "z", {}};
  CHECK_FALSE(a.Overlaps(b));
  CHECK(a.Overlaps(c));
  CHECK(a.discontinuous());
  CHECK_FALSE(c.discontinuous());
}

}  // namespace
}  // namespace snacs
