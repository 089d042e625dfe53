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

#include <algorithm>
#include <set>
#include <tuple>

#include "snacs/translit.h"

namespace snacs {

bool AdpositionTarget::discontinuous() const {
  for (std::size_t i = 1; i < token_indices.size(); ++i) {
    if (token_indices[i] != token_indices[i - 1] + 1) return true;
  }
  return false;
}

bool AdpositionTarget::Overlaps(const AdpositionTarget &other) const {
  for (std::size_t a : token_indices) {
    if (std::find(other.token_indices.begin(), other.token_indices.end(), a) !=
        other.token_indices.end()) {
      return true;
    }
  }
  return false;
}

Matcher::Matcher(const Lexicon &lexicon, MatcherOptions options)
    : lexicon_(lexicon), options_(options) {}

void Matcher::MatchAt(const std::vector<std::string> &keys, std::size_t start,
                      std::vector<AdpositionTarget> &out) const {
  for (const VariantRef &ref : lexicon_.VariantsStartingWith(keys[start])) {
    if (ref.category == Category::kObliquePseudoMarker) continue;
    const SurfaceVariant &v = ref.variant;
    std::size_t head_len = v.gap_before.value_or(v.tokens.size());
    if (start + head_len > keys.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < head_len && ok; ++k) {
      ok = keys[start + k] == v.tokens[k];
    }
    if (!ok) continue;

    AdpositionTarget t;
    for (std::size_t k = 0; k < head_len; ++k) t.token_indices.push_back(start + k);
    if (v.gap_before) {
      std::size_t tail_len = v.tokens.size() - head_len;
      bool found = false;
      for (std::size_t gap = 1; gap <= options_.max_gap && !found; ++gap) {
        std::size_t tail = start + head_len + gap;
        if (tail + tail_len > keys.size()) break;
        bool tail_ok = true;
        for (std::size_t k = 0; k < tail_len && tail_ok; ++k) {
          tail_ok = keys[tail + k] == v.tokens[head_len + k];
        }
        if (tail_ok) {
          for (std::size_t k = 0; k < tail_len; ++k) {
            t.token_indices.push_back(tail + k);
          }
          found = true;
        }
      }
      if (!found) continue;
    }
    t.surface = v.tokens;
    auto lemma = lexicon_.NormalizeSurface(t.surface);
    if (!lemma) continue;
    const LexEntry *entry = lexicon_.Lookup(*lemma);
    if (entry == nullptr || entry->category == Category::kObliquePseudoMarker) {
      continue;
    }
    t.lemma = *lemma;
    out.push_back(std::move(t));
  }
}

void Matcher::MatchSuffixSegment(const std::vector<std::string> &keys,
                                 std::size_t index,
                                 std::vector<AdpositionTarget> &out) const {
  const std::string &token = keys[index];
  std::size_t dash = token.rfind('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
    return;
  }
  std::string segment = token.substr(dash + 1);
  for (const VariantRef &ref : lexicon_.VariantsStartingWith(segment)) {
    if (ref.category != Category::kSuffix || ref.variant.tokens.size() != 1) {
      continue;
    }
    auto lemma = lexicon_.NormalizeSurface({segment});
    if (!lemma || *lemma != ref.lemma) continue;
    out.push_back(AdpositionTarget{{index}, *lemma, {segment}});
    return;
  }
}

std::vector<AdpositionTarget> Matcher::Candidates(
    const Sentence &sentence) const {
  std::vector<std::string> keys;
  keys.reserve(sentence.tokens.size());
  for (const auto &t : sentence.tokens) keys.push_back(NormalizeKey(t));
  std::vector<AdpositionTarget> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    MatchAt(keys, i, out);
    MatchSuffixSegment(keys, i, out);
  }
  // The same span can be reached through several variants of one lemma.
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return std::tie(a.token_indices, a.lemma, a.surface) <
           std::tie(b.token_indices, b.lemma, b.surface);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto &a, const auto &b) {
                          return a.token_indices == b.token_indices &&
                                 a.lemma == b.lemma;
                        }),
            out.end());
  return out;
}

std::vector<AdpositionTarget> Matcher::ResolveOverlaps(
    std::vector<AdpositionTarget> candidates) const {
  auto priority = [&](const AdpositionTarget &t) {
    const LexEntry *e = lexicon_.Lookup(t.lemma);
    return e ? CategoryPriority(e->category) : 99;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const AdpositionTarget &a, const AdpositionTarget &b) {
                     if (a.token_indices.size() != b.token_indices.size()) {
                       return a.token_indices.size() > b.token_indices.size();
                     }
                     if (a.token_indices.front() != b.token_indices.front()) {
                       return a.token_indices.front() < b.token_indices.front();
                     }
                     if (a.discontinuous() != b.discontinuous()) {
                       return !a.discontinuous();
                     }
                     int pa = priority(a), pb = priority(b);
                     if (pa != pb) return pa < pb;
                     return std::tie(a.lemma, a.token_indices) <
                            std::tie(b.lemma, b.token_indices);
                   });
  std::set<std::size_t> taken;
  std::vector<AdpositionTarget> kept;
  for (auto &c : candidates) {
    bool clash = std::any_of(c.token_indices.begin(), c.token_indices.end(),
                             [&](std::size_t i) { return taken.count(i) > 0; });
    if (clash) continue;
    taken.insert(c.token_indices.begin(), c.token_indices.end());
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) {
    return a.token_indices < b.token_indices;
  });
  return kept;
}

std::vector<AdpositionTarget> Matcher::FindTargets(
    const Sentence &sentence) const {
  return ResolveOverlaps(Candidates(sentence));
}

}  // namespace snacs
