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

#include "snacs/hierarchy.h"

#include <map>
#include <set>

#include "doctest.h"
#include "snacs/error.h"
#include "test_util.h"

namespace snacs {
namespace {

const Hierarchy &H() { return testing::SharedToolkit().hierarchy(); }

// Naive reference: walk parent pointers by hand.
std::vector<std::string> NaiveChain(const Hierarchy &h, const std::string &n) {
  std::vector<std::string> out{n};
  while (h.Get(out.back()).parent) out.push_back(*h.Get(out.back()).parent);
  return out;
}

std::optional<std::string> NaiveLca(const Hierarchy &h, const std::string &a,
                                    const std::string &b) {
  auto ca = NaiveChain(h, a);
  std::set<std::string> cb;
  for (auto &x : NaiveChain(h, b)) cb.insert(x);
  for (auto &x : ca) {
    if (cb.count(x)) return x;
  }
  return std::nullopt;
}

TEST_CASE("inventory size and special labels") {
  std::size_t core = 0;
  for (const auto &n : H().nodes()) {
    if (n.group != Group::kSpecial && n.group != Group::kContext) ++core;
  }
  CHECK(core == 50);
  REQUIRE(H().Contains("Focus"));
  CHECK(H().Get("Focus").group == Group::kContext);
  CHECK(*H().Get("Focus").parent == "Context");
  REQUIRE(H().Contains("`d"));
  CHECK(H().Get("`d").group == Group::kSpecial);
  CHECK_FALSE(H().Get("`d").parent.has_value());
}

TEST_CASE("known lca values") {
  CHECK(H().Lca("Source", "Goal") == "Locus");
  CHECK(H().Lca("StartTime", "EndTime") == "Time");
  CHECK(H().Lca("Time", "Time") == "Time");
  CHECK(H().Lca("Stuff", "Possession") == "Characteristic");
  CHECK_THROWS_AS(H().Lca("Agent", "Locus"), Error);
  CHECK_THROWS_AS(H().Lca("Agent", "Nope"), UnknownLabelError);
}

TEST_CASE("roots are exactly the five groups") {
  std::set<std::string> roots;
  for (auto &r : H().roots()) roots.insert(r);
  CHECK(roots == std::set<std::string>{"Circumstance", "Participant",
                                       "Configuration", "Context", "`d"});
}

TEST_CASE("forest invariants hold for every node") {
  for (const auto &n : H().nodes()) {
    CAPTURE(n.name);
    auto chain = NaiveChain(H(), n.name);
    CHECK(chain == H().Chain(n.name));
    CHECK(static_cast<int>(chain.size()) - 1 == n.depth);
    CHECK(std::set<std::string>(chain.begin(), chain.end()).size() == chain.size());
    CHECK(H().RootOf(n.name) == chain.back());
    for (auto &a : chain) CHECK(H().Get(a).group == n.group);
    if (n.parent) CHECK(H().Contains(*n.parent));
  }
}

TEST_CASE("subsumption and lca agree with the naive reference") {
  for (const auto &a : H().nodes()) {
    for (const auto &b : H().nodes()) {
      auto chain = NaiveChain(H(), b.name);
      bool naive = std::find(chain.begin(), chain.end(), a.name) != chain.end();
      CHECK(H().Subsumes(a.name, b.name) == naive);
      auto lca = NaiveLca(H(), a.name, b.name);
      if (lca) {
        CHECK(H().Lca(a.name, b.name) == *lca);
        CHECK(H().Lca(b.name, a.name) == *lca);
        CHECK(H().Subsumes(*lca, a.name));
        CHECK(H().Subsumes(*lca, b.name));
      } else {
        CHECK_THROWS(H().Lca(a.name, b.name));
      }
    }
  }
}

TEST_CASE("placement-uncertain nodes are flagged") {
  CHECK(H().Get("OrgMember").placement_uncertain);
  CHECK(H().Get("QuantityValue").placement_uncertain);
  CHECK_FALSE(H().Get("Locus").placement_uncertain);
}

TEST_CASE("construal label syntax") {
  auto c = ConstrualLabel::Parse("Circumstance↝Locus");
  REQUIRE(c);
  CHECK(c->scene == "Circumstance");
  CHECK(c->function == "Locus");
  CHECK(c->ToString() == "Circumstance↝Locus");
  auto s = ConstrualLabel::Parse("Goal");
  REQUIRE(s);
  CHECK(s->congruent());
  CHECK(s->ToString() == "Goal");
  CHECK_FALSE(ConstrualLabel::Parse(""));
  CHECK_FALSE(ConstrualLabel::Parse("↝Goal"));
  CHECK_FALSE(ConstrualLabel::Parse("A↝"));
  CHECK_FALSE(ConstrualLabel::Parse("A↝B↝C"));
  CHECK(H().Contains(*c));
  CHECK_FALSE(H().Contains(ConstrualLabel("Locus", "Nope")));
}

int LoadErrorLine(const std::string &text) {
  try {
    Hierarchy::Load(text);
  } catch (const LoadError &e) {
    return e.line();
  }
  return -1;
}

TEST_CASE("malformed inventories are rejected with line numbers") {
  CHECK(LoadErrorLine("A\t-\tCircumstance\nA\t-\tCircumstance\n") == 2);
  CHECK(LoadErrorLine("A\t-\tCircumstance\nB\tZ\tCircumstance\n") == 2);
  CHECK(LoadErrorLine("A\t-\tCircumstance\nB\tA\tParticipant\n") == 2);
  CHECK(LoadErrorLine("A\t-\tCircumstance\nB\tC\tCircumstance\nC\tB\tCircumstance\n") > 0);
  CHECK(LoadErrorLine("A\t-\tNowhere\n") == 1);
  CHECK(LoadErrorLine("A\t-\n") == 1);
  CHECK(LoadErrorLine("A\t-\tCircumstance\tweird\n") == 1);
  CHECK_THROWS_AS(Hierarchy::Load("# nothing\n"), LoadError);
  CHECK_THROWS_AS(Hierarchy::LoadFile("/nonexistent/h.tsv"), Error);
}

TEST_CASE("comments and blank lines are ignored") {
  auto h = Hierarchy::Load("# c\n\nA\t-\tCircumstance\nB\tA\tCircumstance # tail\n");
  CHECK(h.size() == 2);
  CHECK(h.Subsumes("A", "B"));
}

}  // namespace
}  // namespace snacs
