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

#ifndef SNACS_MATCHER_H_
#define SNACS_MATCHER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "snacs/lexicon.h"

namespace snacs {

struct Sentence {
  std::string source_id;
  std::vector<std::string> tokens;

  bool operator==(const Sentence &) const = default;
};

struct AdpositionTarget {
  // Strictly increasing; gaps mark a discontinuous target.
  std::vector<std::size_t> token_indices;
  std::string lemma;
  // Matched material. For a hyphen-attached suffix this is the suffix
  // segment, not the whole token.
  std::vector<std::string> surface;

  bool discontinuous() const;
  bool Overlaps(const AdpositionTarget &other) const;

  bool operator==(const AdpositionTarget &) const = default;
};

struct MatcherOptions {
  // Upper bound on tokens inside a circumposition gap.
  std::size_t max_gap = 4;
};

class Matcher {
 public:
  explicit Matcher(const Lexicon &lexicon, MatcherOptions options = {});

  // Non-overlapping maximal targets sorted by first index.
  std::vector<AdpositionTarget> FindTargets(const Sentence &sentence) const;

  // Every variant match before overlap resolution.
  std::vector<AdpositionTarget> Candidates(const Sentence &sentence) const;

  // Greedy selection: more matched tokens first, then leftmost, then
  // contiguous over discontinuous, then category priority and lemma.
  std::vector<AdpositionTarget> ResolveOverlaps(
      std::vector<AdpositionTarget> candidates) const;

  const MatcherOptions &options() const { return options_; }

 private:
  void MatchAt(const std::vector<std::string> &keys, std::size_t start,
               std::vector<AdpositionTarget> &out) const;
  void MatchSuffixSegment(const std::vector<std::string> &keys,
                          std::size_t index,
                          std::vector<AdpositionTarget> &out) const;

  const Lexicon &lexicon_;
  MatcherOptions options_;
};

}  // namespace snacs

#endif  // SNACS_MATCHER_H_
